"""The 16-dimensional reduced quantum algebra and its Hopf-type structure.

Basis monomials are a^p b^r with 0 <= p, r <= 3 in the order
1, b, b^2, b^3, a, a b, ..., a^3 b^3 (index 4p + r).  The defining rewriting
system is b a -> q^2 a b, a^4 -> 1, b^4 -> 1, with the two dependent
generators eliminated on input:

* delta := a^3 (1 + q^2 bstar b), which reduces to a^3,
* bstar := 0.

bstar := 0 is the unique normal form (within scalar multiples of the
reference column a^k b^3 shape) for which the counit and antipode axioms
close exactly on all 16 basis monomials; the reference right-translation
matrix instead encodes bstar = q^2 (a - 1) b^3, and audit_relations()
reports every defining relation that the operational normal forms break.
The reference matrices stay the operative input of the spectral layer.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from . import linalg
from .scalars import ZERO, ONE, GaussianRational, q_root

Monomial = tuple[int, int]  # (p, r): exponents of a and b

DIM = 16


def monomial_index(m: Monomial) -> int:
    return 4 * m[0] + m[1]


def basis_monomials() -> list[Monomial]:
    return [(p, r) for p in range(4) for r in range(4)]


def monomial_name(m: Monomial) -> str:
    p, r = m
    out = []
    if p:
        out.append("a" if p == 1 else f"a^{p}")
    if r:
        out.append("b" if r == 1 else f"b^{r}")
    return " ".join(out) if out else "1"


class AlgebraElement:
    """Element of the reduced algebra as a sparse coefficient map over monomials."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: "QuantumAlgebra", coeffs: Mapping[Monomial, GaussianRational] | None = None):
        self.algebra = algebra
        pruned = {}
        if coeffs:
            for m, c in coeffs.items():
                if c:
                    pruned[m] = c
        self.coeffs = pruned

    # -- plumbing ---------------------------------------------------------

    def _check_mode(self, other: "AlgebraElement") -> None:
        if other.algebra.q != self.algebra.q:
            raise ValueError("mixed q modes in one expression")

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra.q == other.algebra.q and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self) -> str:
        return f"<{self}>"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for m in sorted(self.coeffs, key=monomial_index):
            c = self.coeffs[m]
            name = monomial_name(m)
            if name == "1":
                parts.append(f"({c})")
            else:
                parts.append(f"({c})*{name}")
        return " + ".join(parts)

    # -- linear structure ---------------------------------------------------

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check_mode(other)
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, ZERO) + c
        return AlgebraElement(self.algebra, out)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.algebra, {m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, s: GaussianRational) -> "AlgebraElement":
        return AlgebraElement(self.algebra, {m: s * c for m, c in self.coeffs.items()})

    # -- multiplication -------------------------------------------------------

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check_mode(other)
        alg = self.algebra
        out: dict[Monomial, GaussianRational] = {}
        for (p1, r1), c1 in self.coeffs.items():
            for (p2, r2), c2 in other.coeffs.items():
                # b^r1 a^p2 = q^(2 r1 p2) a^p2 b^r1; a^4 = b^4 = 1
                phase = alg.q ** ((2 * r1 * p2) % 4)
                m = ((p1 + p2) % 4, (r1 + r2) % 4)
                out[m] = out.get(m, ZERO) + c1 * c2 * phase
        return AlgebraElement(alg, out)

    def __pow__(self, n: int) -> "AlgebraElement":
        if n < 0:
            raise ValueError("negative powers not supported; use explicit inverses")
        out = self.algebra.one
        for _ in range(n):
            out = out * self
        return out

    # -- conversions ------------------------------------------------------------

    def coords(self) -> list[GaussianRational]:
        v = [ZERO] * DIM
        for m, c in self.coeffs.items():
            v[monomial_index(m)] = c
        return v

    def to_json(self) -> list[dict]:
        """Wire format: [{"monomial": "a^p b^r", "coeff": scalar-string}, ...]."""
        from .scalars import format_gaussian

        return [
            {"monomial": monomial_name(m), "coeff": format_gaussian(self.coeffs[m])}
            for m in sorted(self.coeffs, key=monomial_index)
        ]

    def counit(self) -> GaussianRational:
        out = ZERO
        for (p, r), c in self.coeffs.items():
            if r == 0:
                out = out + c
        return out


class TensorElement:
    """Element of the 256-dimensional two-fold tensor square of the algebra."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: "QuantumAlgebra", coeffs: Mapping[tuple[Monomial, Monomial], GaussianRational] | None = None):
        self.algebra = algebra
        pruned = {}
        if coeffs:
            for k, c in coeffs.items():
                if c:
                    pruned[k] = c
        self.coeffs = pruned

    @classmethod
    def pure(cls, x: AlgebraElement, y: AlgebraElement) -> "TensorElement":
        out: dict[tuple[Monomial, Monomial], GaussianRational] = {}
        for m1, c1 in x.coeffs.items():
            for m2, c2 in y.coeffs.items():
                key = (m1, m2)
                out[key] = out.get(key, ZERO) + c1 * c2
        return cls(x.algebra, out)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __add__(self, other: "TensorElement") -> "TensorElement":
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, ZERO) + c
        return TensorElement(self.algebra, out)

    def __neg__(self) -> "TensorElement":
        return TensorElement(self.algebra, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-other)

    def scale(self, s: GaussianRational) -> "TensorElement":
        return TensorElement(self.algebra, {k: s * c for k, c in self.coeffs.items()})

    def __mul__(self, other: "TensorElement") -> "TensorElement":
        alg = self.algebra
        out: dict[tuple[Monomial, Monomial], GaussianRational] = {}
        for (x1, y1), c1 in self.coeffs.items():
            for (x2, y2), c2 in other.coeffs.items():
                left = AlgebraElement(alg, {x1: ONE}) * AlgebraElement(alg, {x2: ONE})
                right = AlgebraElement(alg, {y1: ONE}) * AlgebraElement(alg, {y2: ONE})
                for mx, cx in left.coeffs.items():
                    for my, cy in right.coeffs.items():
                        key = (mx, my)
                        out[key] = out.get(key, ZERO) + c1 * c2 * cx * cy
        return TensorElement(alg, out)

    def apply(self, f_left: Callable[[AlgebraElement], AlgebraElement] | None,
              f_right: Callable[[AlgebraElement], AlgebraElement] | None) -> "TensorElement":
        """Apply linear maps to the tensor factors (None = identity)."""
        alg = self.algebra
        out: dict[tuple[Monomial, Monomial], GaussianRational] = {}
        for (mx, my), c in self.coeffs.items():
            ex = AlgebraElement(alg, {mx: ONE})
            ey = AlgebraElement(alg, {my: ONE})
            if f_left is not None:
                ex = f_left(ex)
            if f_right is not None:
                ey = f_right(ey)
            for m1, c1 in ex.coeffs.items():
                for m2, c2 in ey.coeffs.items():
                    key = (m1, m2)
                    out[key] = out.get(key, ZERO) + c * c1 * c2
        return TensorElement(alg, out)

    def multiply_out(self) -> AlgebraElement:
        """Collapse x (x) y -> x*y."""
        alg = self.algebra
        out = alg.zero
        for (mx, my), c in self.coeffs.items():
            prod = AlgebraElement(alg, {mx: ONE}) * AlgebraElement(alg, {my: ONE})
            out = out + prod.scale(c)
        return out


@dataclass(frozen=True)
class TranslationMatrix:
    """16x16 matrix of right multiplication: column j holds monomial_j * g."""

    tag: str
    source: str  # "derived" or "printed"
    entries: tuple  # tuple of 16 row-tuples of GaussianRational

    def column(self, j: int) -> list[GaussianRational]:
        return [self.entries[i][j] for i in range(DIM)]

    def __getitem__(self, ij: tuple[int, int]) -> GaussianRational:
        return self.entries[ij[0]][ij[1]]

    def rows(self) -> list[list[GaussianRational]]:
        return [list(r) for r in self.entries]


class SingularAntipode(ValueError):
    pass


class QuantumAlgebra:
    """Context object fixing the q mode and owning the generator normal forms."""

    def __init__(self, mode: str = "i"):
        if mode not in ("i", "-i"):
            raise ValueError("the reduced algebra exists only at q = i or q = -i")
        self.mode = mode
        self.q = q_root(mode)
        self.q2 = self.q * self.q  # equals -1 in both modes
        self.mu = ONE - (self.q * self.q).inverse()  # 1 - q^-2 = 2 at q = +/-i
        self.zero = AlgebraElement(self, {})
        self.one = AlgebraElement(self, {(0, 0): ONE})
        self.alpha = AlgebraElement(self, {(1, 0): ONE})
        self.beta = AlgebraElement(self, {(0, 1): ONE})
        # dependent generators, eliminated on input (see module docstring)
        self.beta_star = AlgebraElement(self, {})
        self.delta = AlgebraElement(self, {(3, 0): ONE})
        # reference normal form encoded by the printed translation matrix
        self.beta_star_reference = AlgebraElement(
            self, {(1, 3): self.q2, (0, 3): -self.q2}
        )
        self._antipode_matrix: list[list[GaussianRational]] | None = None
        self._antipode_inverse: list[list[GaussianRational]] | None = None

    # -- element constructors ------------------------------------------------

    def element(self, coeffs: Mapping[Monomial, GaussianRational]) -> AlgebraElement:
        return AlgebraElement(self, coeffs)

    def scalar(self, s: GaussianRational) -> AlgebraElement:
        return AlgebraElement(self, {(0, 0): s})

    def monomial(self, p: int, r: int) -> AlgebraElement:
        return AlgebraElement(self, {(p % 4, r % 4): ONE})

    def from_coords(self, v: Sequence[GaussianRational]) -> AlgebraElement:
        return AlgebraElement(self, {m: v[monomial_index(m)] for m in basis_monomials()})

    def from_json(self, items: Iterable[Mapping[str, str]]) -> AlgebraElement:
        from .scalars import parse_gaussian

        coeffs: dict[Monomial, GaussianRational] = {}
        for item in items:
            name = item["monomial"].replace(" ", "")
            p = r = 0
            for part in filter(None, name.replace("a", " a").replace("b", " b").split()):
                power = 1 if "^" not in part else int(part.split("^")[1])
                if part.startswith("a"):
                    p = power
                elif part.startswith("b"):
                    r = power
            if name in ("", "1"):
                p = r = 0
            key = (p % 4, r % 4)
            coeffs[key] = coeffs.get(key, ZERO) + parse_gaussian(item["coeff"])
        return AlgebraElement(self, coeffs)

    def generator(self, name: str) -> AlgebraElement:
        try:
            return {"alpha": self.alpha, "beta": self.beta,
                    "beta_star": self.beta_star, "delta": self.delta}[name]
        except KeyError:
            raise ValueError(f"unknown generator {name!r}") from None

    def normalize(self, word: Iterable[str], scalar: GaussianRational = ONE) -> AlgebraElement:
        """Normal form of scalar * (product of generator letters)."""
        out = self.scalar(scalar)
        for letter in word:
            out = out * self.generator(letter)
        return out

    # -- Hopf-type structure ----------------------------------------------------

    def coproduct(self, x: AlgebraElement) -> TensorElement:
        da = TensorElement.pure(self.alpha, self.alpha) + TensorElement.pure(self.beta, self.beta_star)
        db = TensorElement.pure(self.alpha, self.beta) + TensorElement.pure(self.beta, self.delta)
        out = TensorElement(self, {})
        unit = TensorElement.pure(self.one, self.one)
        for (p, r), c in x.coeffs.items():
            term = unit
            for _ in range(p):
                term = term * da
            for _ in range(r):
                term = term * db
            out = out + term.scale(c)
        return out

    def counit(self, x: AlgebraElement) -> GaussianRational:
        return x.counit()

    def antipode_on_generator(self, name: str) -> AlgebraElement:
        return {
            "alpha": self.delta,
            "delta": self.alpha,
            "beta": self.beta.scale(-self.q2),
            "beta_star": self.beta_star.scale(-(self.q2.inverse())),
        }[name]

    def antipode(self, x: AlgebraElement) -> AlgebraElement:
        """Anti-multiplicative extension of the generator values."""
        s_a = self.antipode_on_generator("alpha")
        s_b = self.antipode_on_generator("beta")
        out = self.zero
        for (p, r), c in x.coeffs.items():
            term = self.one
            for _ in range(r):  # reversed word: S(a^p b^r) = S(b)^r S(a)^p
                term = term * s_b
            for _ in range(p):
                term = term * s_a
            out = out + term.scale(c)
        return out

    def _antipode_matrices(self) -> tuple[list[list[GaussianRational]], list[list[GaussianRational]]]:
        if self._antipode_matrix is None:
            cols = [self.antipode(self.monomial(p, r)).coords() for (p, r) in basis_monomials()]
            mat = [[cols[j][i] for j in range(DIM)] for i in range(DIM)]
            try:
                inv = linalg.invert(mat, ONE, ZERO)
            except ValueError as exc:
                raise SingularAntipode("computed antipode matrix is singular") from exc
            self._antipode_matrix = mat
            self._antipode_inverse = inv
        return self._antipode_matrix, self._antipode_inverse

    def inverse_antipode(self, x: AlgebraElement) -> AlgebraElement:
        _, inv = self._antipode_matrices()
        return self.from_coords(linalg.mat_apply(inv, x.coords(), ZERO))

    def antipode_axiom_defect(self, x: AlgebraElement) -> tuple[AlgebraElement, AlgebraElement]:
        """Both convolution identities minus eps(x)*1; exact zeros when the axiom holds."""
        target = self.scalar(x.counit())
        dx = self.coproduct(x)
        left = dx.apply(self.antipode, None).multiply_out() - target
        right = dx.apply(None, self.antipode).multiply_out() - target
        return left, right

    # -- translation operators -----------------------------------------------

    def right_multiplication_matrix(self, x: AlgebraElement, tag: str = "", source: str = "derived") -> TranslationMatrix:
        cols = [(self.monomial(p, r) * x).coords() for (p, r) in basis_monomials()]
        entries = tuple(tuple(cols[j][i] for j in range(DIM)) for i in range(DIM))
        return TranslationMatrix(tag=tag, source=source, entries=entries)

    def translation_matrix(self, name: str) -> TranslationMatrix:
        return self.right_multiplication_matrix(self.generator(name), tag=name, source="derived")

    # -- generator matrix -------------------------------------------------------

    def generator_matrix(self) -> list[list[AlgebraElement]]:
        return [[self.alpha, self.beta], [self.beta_star, self.delta]]

    # -- relation audit -----------------------------------------------------------

    def relation_residuals(self, beta_star: AlgebraElement | None = None,
                           delta: AlgebraElement | None = None) -> dict[str, AlgebraElement]:
        """Residual (lhs - rhs) of each defining relation under given normal forms."""
        bs = self.beta_star if beta_star is None else beta_star
        dl = self.delta if delta is None else delta
        a, b, mu = self.alpha, self.beta, self.mu
        q2 = self.q2
        res = {
            "b a = q^2 a b": b * a - (a * b).scale(q2),
            "delta a = a delta": dl * a - a * dl,
            "[b, bstar] = mu a (delta - a)": (b * bs - bs * b) - (a * (dl - a)).scale(mu),
            "[delta, b] = mu a b": (dl * b - b * dl) - (a * b).scale(mu),
            "a delta - q^2 bstar b = 1": a * dl - (bs * b).scale(q2) - self.one,
            "a^4 = 1": self.alpha ** 4 - self.one,
            "delta^4 = 1": dl ** 4 - self.one,
            "b^4 = bstar^4": self.beta ** 4 - bs ** 4,
        }
        return res
