"""The m = 0 lattice t^(k): seeds, recursion steps, shell-by-shell build, JSON persistence."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product
from pathlib import Path

from ..errors import ContractViolation, FormatError, MissingDependency, Unreachable, ZeroDivisor
from ..exact import RatZeta, Z
from ..tsystem.symmetry import from_image, image_index
from ..tsystem.tnk import KIndex
from .recurrence import corners, rhs

FORMAT_NAME = "susy8v-lattice"
FORMAT_VERSION = 1

SEEDS = (
    ((0, 0, 0, 0), RatZeta(1)),
    ((1, -1, 0, 0), RatZeta(1)),
    ((0, -1, -1, 0), -2 * Z**2 * (Z - 1) * (Z + 1) ** 2 * (2 * Z + 1) / (Z + 2) ** 2),
)

# symmetries usable on stored m = 0 values, in the order they are tried
LATTICE_SYMMETRIES = (
    "swap01_invert",
    "swap02_mobius",
    "swap01_swap23_reflect",
    "complement_zscc",
    "complement_esp",
)


def seeds() -> list[tuple[tuple[int, ...], RatZeta]]:
    return list(SEEDS)


def make_box(spec) -> tuple[tuple[int, int], ...]:
    """Normalise an int radius, a (lo, hi) pair or four (lo, hi) pairs."""
    if isinstance(spec, int):
        return ((-spec, spec),) * 4
    spec = tuple(spec)
    if len(spec) == 2 and all(isinstance(v, int) for v in spec):
        return (tuple(spec),) * 4
    if len(spec) == 4:
        return tuple((int(lo), int(hi)) for lo, hi in spec)
    raise ValueError(f"cannot read a box from {spec!r}")


def box_cells(box) -> list[tuple[int, ...]]:
    """Even-|k| cells of a box ordered by shell max|k_j|, then lexicographically."""
    cells = [k for k in product(*(range(lo, hi + 1) for lo, hi in box)) if sum(k) % 2 == 0]
    return sorted(cells, key=lambda k: (max(abs(v) for v in k), k))


def in_box(k, box) -> bool:
    return all(lo <= v <= hi for v, (lo, hi) in zip(k, box))


@dataclass
class LatticeStore:
    box: tuple[tuple[int, int], ...]
    entries: dict[tuple[int, ...], tuple[RatZeta, str]] = field(default_factory=dict)

    def __contains__(self, k) -> bool:
        return tuple(k) in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def get(self, k) -> RatZeta:
        try:
            return self.entries[tuple(k)][0]
        except KeyError:
            raise MissingDependency(f"t^{tuple(k)} is not in the store") from None

    def provenance(self, k) -> str:
        return self.entries[tuple(k)][1]

    def put(self, k, value: RatZeta, provenance: str):
        k = tuple(k)
        if value.is_zero():
            raise ZeroDivisor(f"refusing to store t^{k} = 0")
        if k in self.entries and self.entries[k][0] != value:
            raise ContractViolation(f"second route to t^{k} disagrees with the stored value")
        self.entries.setdefault(k, (value, provenance))

    def restricted(self, box) -> LatticeStore:
        return LatticeStore(box, {k: v for k, v in self.entries.items() if in_box(k, box)})


@dataclass(frozen=True)
class RecStep:
    """One use of the kma or kmb identity at base k, solved for corner "a" = k-2e0 or "b" = k+e0+-e1."""

    direction: str
    base: tuple[int, ...]
    solved: str

    def unknown(self) -> tuple[int, ...]:
        (a, b), _ = corners(self.direction, self.base)
        return a if self.solved == "a" else b

    def known(self) -> tuple[tuple[int, ...], ...]:
        (a, b), (c, d) = corners(self.direction, self.base)
        return (b if self.solved == "a" else a), c, d


def rec_solve(step: RecStep, store: LatticeStore) -> RatZeta:
    """Solve one bilinear identity for its unknown left-hand corner."""
    other, c, d = step.known()
    for k in (other, c, d):
        if k not in store:
            raise MissingDependency(f"t^{k} needed by {step} is missing")
    divisor = store.get(other)
    if divisor.is_zero():
        raise ZeroDivisor(f"t^{other} vanishes")
    tc, td = store.get(c), store.get(d)
    return rhs(step.direction, step.base, tc, tc.derivative(), td, td.derivative()) / divisor


def steps_for(target) -> list[RecStep]:
    """Every recursion step whose unknown corner is ``target``."""
    target = tuple(target)
    out = []
    for direction, e1 in (("kma", 1), ("kmb", -1)):
        # target as a = k - 2 e0
        base = (target[0] + 2,) + target[1:]
        out.append(RecStep(direction, base, "a"))
        # target as b = k + e0 + e1
        base = (target[0] - 1, target[1] - e1) + target[2:]
        out.append(RecStep(direction, base, "b"))
    return out


def _try_symmetries(k, store: LatticeStore):
    index = KIndex.for_t(k)
    for which in LATTICE_SYMMETRIES:
        src = image_index(which, index).k
        if src != index.k and src in store:
            return from_image(which, index, store.get(src)), f"symmetry:{which}"
    return None


def _try_recursion(k, store: LatticeStore):
    for step in steps_for(k):
        if all(dep in store for dep in step.known()):
            return rec_solve(step, store), f"recursion:{step.direction}"
    return None


def _populate(box, order) -> LatticeStore:
    store = LatticeStore(box)
    for k, v in SEEDS:
        store.put(k, v, "seed")
    cells = [k for k in box_cells(box) if k not in store]
    if order == "reverse":
        cells = sorted(cells, key=lambda k: (max(abs(v) for v in k), tuple(-x for x in k)))
    shells = sorted({max(abs(v) for v in k) for k in cells})
    pending = list(cells)
    for shell in shells:
        progress = True
        while progress:
            progress = False
            for k in [c for c in pending if max(abs(v) for v in c) <= shell]:
                found = _try_recursion(k, store) or _try_symmetries(k, store)
                if found is not None:
                    store.put(k, *found)
                    pending.remove(k)
                    progress = True
    if pending:
        raise Unreachable(f"{len(pending)} cells unreachable, first {pending[0]}")
    return store


def build(box=1, *, order: str = "forward") -> LatticeStore:
    """Fill every even cell of the box from the seeds by recursion and symmetry.

    When some cell cannot be reached inside the box, the box is widened by one
    in every direction and the result restricted back.
    """
    box = make_box(box)
    try:
        return _populate(box, order)
    except Unreachable:
        wider = tuple((lo - 1, hi + 1) for lo, hi in box)
        return _populate(wider, order).restricted(box)


# persistence


def _dump_value(value: RatZeta):
    num, den = value.coeff_lists()
    return [str(c) for c in num], [str(c) for c in den]


def to_json(store: LatticeStore) -> dict:
    entries = []
    for k in sorted(store.entries):
        value, prov = store.entries[k]
        num, den = _dump_value(value)
        entries.append({"k": list(k), "num": num, "den": den, "provenance": prov})
    return {"format": FORMAT_NAME, "version": FORMAT_VERSION, "box": [list(b) for b in store.box], "entries": entries}


def from_json(data) -> LatticeStore:
    if not isinstance(data, dict) or data.get("format") != FORMAT_NAME:
        raise FormatError("not a lattice file")
    if data.get("version") != FORMAT_VERSION:
        raise FormatError(f"unsupported lattice file version {data.get('version')!r}")
    try:
        store = LatticeStore(tuple(tuple(int(v) for v in b) for b in data["box"]))
        for entry in data["entries"]:
            k = tuple(int(v) for v in entry["k"])
            if len(k) != 4:
                raise FormatError(f"bad index {entry['k']!r}")
            value = RatZeta.from_coeff_lists([int(c) for c in entry["num"]], [int(c) for c in entry["den"]])
            store.put(k, value, str(entry["provenance"]))
    except (KeyError, TypeError, ValueError, ZeroDivisionError, ZeroDivisor) as exc:
        raise FormatError(f"corrupted lattice file: {exc}") from exc
    return store


def persist(store: LatticeStore, path) -> None:
    Path(path).write_text(json.dumps(to_json(store), indent=1))


def load(path) -> LatticeStore:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from exc
    return from_json(data)
