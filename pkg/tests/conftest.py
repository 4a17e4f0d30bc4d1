import random

import pytest
from hypothesis import strategies as st

from foxcalc.freegroup import FreeWord, parse_word
from foxcalc.groupring import RingElt


def word_strategy(rank, max_len=12):
    letter = st.tuples(st.integers(1, rank), st.sampled_from([1, -1]))
    return st.lists(letter, max_size=max_len).map(lambda seq: FreeWord(rank, seq))


def ring_strategy(rank, max_terms=4, max_len=6):
    term = st.tuples(word_strategy(rank, max_len), st.integers(-3, 3))
    return st.lists(term, max_size=max_terms).map(lambda ts: RingElt(rank, ts))


@pytest.fixture
def w2():
    return lambda text: parse_word(text, 2)


@pytest.fixture
def rng():
    return random.Random(20261018)


def random_kernel_word(rng, hom, maxlen=8):
    """A random element of ker(hom): a product of powers u^ord(hom(u)) and conjugates."""
    from foxcalc.freegroup import identity, invert, multiply, random_word

    rank = hom.rank
    w = identity(rank)
    for _ in range(rng.randint(1, 3)):
        u = random_word(rng, rank, maxlen)
        n = u ** hom.target.element_order(hom.apply(u))
        f = random_word(rng, rank, 3)
        w = multiply(w, multiply(multiply(invert(f), n), f))
    return w


ACCEPTANCE_LINES: list[str] = []


def record_acceptance(number, ok, detail):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
