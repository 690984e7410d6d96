from pathlib import Path

import pytest

from olp.parser import parse_program
from olp.syntax import Interpretation, neg, pos

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"

A, B, C = pos("a"), pos("b"), pos("c")
NA, NB = neg("a"), neg("b")
P, Q = pos("p"), pos("q")
NP, NQ = neg("p"), neg("q")


def interp(*literals) -> Interpretation:
    return Interpretation.of(literals)


def corpus_text(name: str) -> str:
    return (CORPUS / f"{name}.olp").read_text()


def load(name: str):
    return parse_program(corpus_text(name))


@pytest.fixture
def ex3():
    return load("ex3")


@pytest.fixture
def ex4():
    return load("ex4")


@pytest.fixture
def ex5():
    return load("ex5")


@pytest.fixture
def ex7():
    return load("ex7")


@pytest.fixture
def defeasible():
    return load("defeasible")
