from importlib.resources import files

from hankel_hurwitz.cli import parse_input
from hankel_hurwitz.matpoly import MatrixPolynomial

DATA = files("hankel_hurwitz") / "data"


def load_bundled(name: str) -> MatrixPolynomial:
    return parse_input(str(DATA / name))[0]


def scalar(*c) -> MatrixPolynomial:
    return MatrixPolynomial.scalar(c)


def random_poly(rng, p: int, n: int) -> MatrixPolynomial:
    shape = (n + 1, p, p)
    return MatrixPolynomial(rng.standard_normal(shape) + 1j * rng.standard_normal(shape))
