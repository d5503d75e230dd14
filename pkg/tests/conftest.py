from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from tensorclass.algebra import BinaryForm, Transform2
from tensorclass.scalars import GaussianRational

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

small_rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))
small_floats = st.floats(-3, 3, allow_nan=False, allow_infinity=False)


@st.composite
def exact_forms(draw, degree=None, nonzero=True):
    d = draw(st.sampled_from((3, 4))) if degree is None else degree
    coeffs = draw(st.lists(small_rationals, min_size=d + 1, max_size=d + 1))
    if nonzero and all(c == 0 for c in coeffs):
        coeffs[0] = Fraction(1)
    return BinaryForm.from_coeffs(coeffs)


@st.composite
def exact_transforms(draw, real=True):
    entries = draw(st.lists(small_rationals, min_size=4, max_size=4))
    if not real:
        ims = draw(st.lists(small_rationals, min_size=4, max_size=4))
        entries = [GaussianRational(a, b) for a, b in zip(entries, ims)]
    for shift in (0, 1, 2):
        a, b, c, d = entries
        try:
            return Transform2.from_matrix([[a + shift, b], [c, d + shift]])
        except ValueError:
            continue
    return Transform2.identity()


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
