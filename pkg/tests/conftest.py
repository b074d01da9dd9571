import random

import pytest
from hypothesis import strategies as st

from scatcalc.ordinal import Ordinal
from scatcalc.sample import random_term


@st.composite
def ordinals(draw, max_exp=3, max_coeff=4, max_finite=6):
    n_terms = draw(st.integers(0, max_exp))
    exps = sorted(
        draw(
            st.lists(
                st.integers(1, max_exp), min_size=n_terms, max_size=n_terms, unique=True
            )
        ),
        reverse=True,
    )
    terms = tuple((e, draw(st.integers(1, max_coeff))) for e in exps)
    return Ordinal(terms, draw(st.integers(0, max_finite)))


@st.composite
def terms(draw, depth=4):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_term(random.Random(seed), depth)


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
