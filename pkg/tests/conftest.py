import hypothesis.strategies as st
from hypothesis import settings

from trigonal4.scalars import Scalar

settings.register_profile("default", deadline=None, max_examples=40)
settings.load_profile("default")


def fraction_strategy(bound=20, max_denominator=8):
    return st.fractions(min_value=-bound, max_value=bound, max_denominator=max_denominator)


def scalar_strategy(bound=20, max_denominator=8):
    f = fraction_strategy(bound, max_denominator)
    return st.builds(Scalar, f, f)
