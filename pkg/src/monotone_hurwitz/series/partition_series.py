"""
Truncated exact power series in p_1, p_2, ..., t and catalyst variables x_i.

A monomial p_alpha t^r x^e is keyed by (alpha, r, e), where e is aligned with
the series' active catalyst slots. The z-variable is implicit (its exponent
is |alpha|). Truncation keeps a monomial when

    |alpha| + sum(e) <= max_weight,   r <= max_r,   every e_i <= max_x

and the weight bound is preserved by every catalyst operator, so truncated
products are exact on every monomial they keep.
"""

from fractions import Fraction
from typing import Callable, Dict, Iterator, Mapping, NamedTuple, Optional, Tuple, Union

from ..core.exceptions import SeriesPreconditionError, SlotMisuseError
from ..core.models import SeriesRecord
from ..exact.arithmetic import Exact, render_exact
from ..exact.partitions import Partition

Exponents = Tuple[int, ...]
Key = Tuple[Partition, int, Exponents]

_EMPTY = Partition()


class Caps(NamedTuple):
    """Truncation caps; max_x None means bounded by the weight only."""

    max_weight: int
    max_r: int = 0
    max_x: Optional[int] = None

    def meet(self, other: "Caps") -> "Caps":
        if self.max_x is None:
            max_x = other.max_x
        elif other.max_x is None:
            max_x = self.max_x
        else:
            max_x = min(self.max_x, other.max_x)
        return Caps(min(self.max_weight, other.max_weight), min(self.max_r, other.max_r), max_x)

    def admits(self, alpha: Partition, r: int, exponents: Exponents) -> bool:
        if r > self.max_r or alpha.weight + sum(exponents) > self.max_weight:
            return False
        return self.max_x is None or all(e <= self.max_x for e in exponents)


def _realign(exponents: Exponents, source: Tuple[int, ...], target: Tuple[int, ...]) -> Exponents:
    lookup = dict(zip(source, exponents))
    return tuple(lookup.get(slot, 0) for slot in target)


class PartitionSeries:
    """
    Immutable truncated series with exact coefficients.

    Absent keys are zero; zero coefficients are never stored.
    """

    __slots__ = ("caps", "slots", "_terms")

    def __init__(
        self,
        terms: Optional[Mapping[Key, Exact]] = None,
        caps: Caps = Caps(0),
        slots: Tuple[int, ...] = ()
    ):
        self.caps = caps
        self.slots = tuple(slots)
        if list(self.slots) != sorted(set(self.slots)):
            raise SlotMisuseError(f"catalyst slots must be distinct and sorted: {slots}")
        self._terms: Dict[Key, Fraction] = {}
        for (alpha, r, exponents), value in (terms or {}).items():
            if len(exponents) != len(self.slots):
                raise SlotMisuseError(f"exponents {exponents} do not match slots {self.slots}")
            if value and caps.admits(alpha, r, exponents):
                self._terms[(alpha, r, tuple(exponents))] = Fraction(value)

    # Construction

    @classmethod
    def zero(cls, caps: Caps, slots: Tuple[int, ...] = ()) -> "PartitionSeries":
        return cls({}, caps, slots)

    @classmethod
    def one(cls, caps: Caps, slots: Tuple[int, ...] = ()) -> "PartitionSeries":
        return cls({(_EMPTY, 0, (0,) * len(slots)): 1}, caps, slots)

    @classmethod
    def monomial(
        cls,
        caps: Caps,
        alpha: Partition = _EMPTY,
        r: int = 0,
        x: Mapping[int, int] = None,
        coefficient: Exact = 1
    ) -> "PartitionSeries":
        """
        c p_alpha t^r prod x_i^e_i, with x given as {slot: exponent}.

        Slots listed in x are active even with exponent 0.
        """
        x = dict(x or {})
        slots = tuple(sorted(x))
        exponents = tuple(x[slot] for slot in slots)
        return cls({(Partition(alpha), r, exponents): coefficient}, caps, slots)

    # Access

    def items(self) -> Iterator[Tuple[Key, Fraction]]:
        """Terms in deterministic order."""
        for key in sorted(self._terms, key=_sort_key):
            yield key, self._terms[key]

    def coefficient(self, alpha: Partition = _EMPTY, r: int = 0, x: Exponents = None) -> Fraction:
        exponents = tuple(x) if x is not None else (0,) * len(self.slots)
        return self._terms.get((Partition(alpha), r, exponents), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coefficient()

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def with_caps(self, caps: Caps) -> "PartitionSeries":
        """Truncate further (caps are met with the current ones)."""
        return PartitionSeries(self._terms, self.caps.meet(caps), self.slots)

    def with_slots(self, slots: Tuple[int, ...]) -> "PartitionSeries":
        """Re-express on a superset of the active slots."""
        slots = tuple(sorted(slots))
        if not set(self.slots) <= set(slots):
            raise SlotMisuseError(f"cannot drop active slots {self.slots} -> {slots}")
        terms = {
            (alpha, r, _realign(e, self.slots, slots)): c
            for (alpha, r, e), c in self._terms.items()
        }
        return PartitionSeries(terms, self.caps, slots)

    def map_terms(
        self,
        fn: Callable[[Partition, int, Exponents, Fraction], Iterator[Tuple[Key, Fraction]]],
        slots: Optional[Tuple[int, ...]] = None,
        caps: Optional[Caps] = None
    ) -> "PartitionSeries":
        """Linear map given by its action on single terms."""
        out: Dict[Key, Fraction] = {}
        for (alpha, r, e), c in self._terms.items():
            for key, value in fn(alpha, r, e, c):
                out[key] = out.get(key, 0) + value
        return PartitionSeries(out, caps or self.caps, self.slots if slots is None else slots)

    # Arithmetic

    def _common(self, other: "PartitionSeries") -> Tuple["PartitionSeries", "PartitionSeries"]:
        slots = tuple(sorted(set(self.slots) | set(other.slots)))
        left = self if self.slots == slots else self.with_slots(slots)
        right = other if other.slots == slots else other.with_slots(slots)
        return left, right

    def __add__(self, other: "PartitionSeries") -> "PartitionSeries":
        left, right = self._common(other)
        terms = dict(left._terms)
        for key, value in right._terms.items():
            terms[key] = terms.get(key, 0) + value
        return PartitionSeries(terms, left.caps.meet(right.caps), left.slots)

    def __neg__(self) -> "PartitionSeries":
        return self.scale(-1)

    def __sub__(self, other: "PartitionSeries") -> "PartitionSeries":
        return self + (-other)

    def scale(self, factor: Exact) -> "PartitionSeries":
        return PartitionSeries({k: v * factor for k, v in self._terms.items()}, self.caps, self.slots)

    def __mul__(self, other: Union["PartitionSeries", int, Fraction]) -> "PartitionSeries":
        if not isinstance(other, PartitionSeries):
            return self.scale(other)
        left, right = self._common(other)
        caps = left.caps.meet(right.caps)
        out: Dict[Key, Fraction] = {}
        right_terms = list(right._terms.items())
        for (a1, r1, e1), c1 in left._terms.items():
            w1 = a1.weight + sum(e1)
            for (a2, r2, e2), c2 in right_terms:
                if r1 + r2 > caps.max_r or w1 + a2.weight + sum(e2) > caps.max_weight:
                    continue
                exponents = tuple(x + y for x, y in zip(e1, e2))
                key = (a1.merge(a2), r1 + r2, exponents)
                out[key] = out.get(key, 0) + c1 * c2
        return PartitionSeries(out, caps, left.slots)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "PartitionSeries":
        if n < 0:
            return self.power(n)
        result = PartitionSeries.one(self.caps, self.slots)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartitionSeries):
            return NotImplemented
        left, right = self._common(other)
        return left._terms == right._terms

    __hash__ = None

    # Exponential and logarithm

    def exp(self) -> "PartitionSeries":
        """
        Raises:
            SeriesPreconditionError: If the constant term is not zero
        """
        if self.constant_term() != 0:
            raise SeriesPreconditionError("exp needs a series with zero constant term")
        result = PartitionSeries.one(self.caps, self.slots)
        term = result
        n = 1
        while True:
            term = (term * self).scale(Fraction(1, n))
            if term.is_zero():
                return result
            result = result + term
            n += 1

    def log(self) -> "PartitionSeries":
        """
        Raises:
            SeriesPreconditionError: If the constant term is not one
        """
        if self.constant_term() != 1:
            raise SeriesPreconditionError("log needs a series with constant term 1")
        u = self - PartitionSeries.one(self.caps, self.slots)
        result = PartitionSeries.zero(self.caps, self.slots)
        power = u
        n = 1
        while not power.is_zero():
            sign = 1 if n % 2 else -1
            result = result + power.scale(Fraction(sign, n))
            power = power * u
            n += 1
        return result

    def power(self, exponent: Exact) -> "PartitionSeries":
        """S^e = exp(e log S) for constant term 1 and any rational e."""
        return self.log().scale(exponent).exp()

    # Output

    def dump(self) -> str:
        """One JSON record per coefficient, sorted lexicographically."""
        lines = []
        for (alpha, r, e), c in sorted(self._terms.items(), key=lambda item: (list(item[0][0]), item[0][1], list(item[0][2]))):
            record = SeriesRecord(alpha=list(alpha), r=r, x=list(e), c=f"{c.numerator}/{c.denominator}")
            lines.append(record.model_dump_json())
        return "\n".join(lines) + ("\n" if lines else "")

    def __repr__(self) -> str:
        shown = ", ".join(
            f"{render_exact(c)}*{_monomial_text(alpha, r, e, self.slots)}"
            for (alpha, r, e), c in list(self.items())[:6]
        )
        more = "" if len(self._terms) <= 6 else f", ... ({len(self._terms)} terms)"
        return f"PartitionSeries({shown}{more})"


def _sort_key(key: Key) -> Tuple:
    alpha, r, e = key
    return (alpha.weight + sum(e), alpha.weight, tuple(-p for p in alpha), r, e)


def _monomial_text(alpha: Partition, r: int, e: Exponents, slots: Tuple[int, ...]) -> str:
    parts = []
    if alpha:
        parts.append(f"p[{alpha.text()}]")
    if r:
        parts.append(f"t^{r}")
    parts.extend(f"x{slot}^{k}" for slot, k in zip(slots, e) if k)
    return "*".join(parts) or "1"


def load_dump(text: str, caps: Caps, slots: Tuple[int, ...] = ()) -> PartitionSeries:
    """Inverse of PartitionSeries.dump for a known slot layout."""
    terms = {}
    for line in text.splitlines():
        if not line.strip():
            continue
        record = SeriesRecord.model_validate_json(line)
        terms[(Partition(record.alpha), record.r, tuple(record.x))] = Fraction(record.c)
    return PartitionSeries(terms, caps, slots)
