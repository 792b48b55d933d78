from fractions import Fraction

from hypothesis import settings, strategies as st

from wimanedge.exactfield import get_field

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_fractions = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 7))


def elements(field_name):
    field = get_field(field_name)
    return st.lists(small_fractions, min_size=field.degree, max_size=field.degree).map(field)
