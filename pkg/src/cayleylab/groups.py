"""Finite permutation groups on explicit point domains, materialized by closure."""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Iterator, Optional

import numpy as np

from .errors import CapExceeded
from .perm import Permutation

if TYPE_CHECKING:
    from .cayley import CayleyGraph

CLOSURE_CAP = 1_000_000


def effective_cap() -> int:
    """Closure cap, overridable through CAYLEYLAB_CAP_ELEMENTS."""
    return int(os.environ.get("CAYLEYLAB_CAP_ELEMENTS", CLOSURE_CAP))

_DTYPE = np.uint16


def _encode(arr: np.ndarray) -> bytes:
    return np.ascontiguousarray(arr, dtype=_DTYPE).tobytes()


def _decode(raw: bytes) -> np.ndarray:
    return np.frombuffer(raw, dtype=_DTYPE)


@dataclass(frozen=True, slots=True)
class VertexMap:
    """A bijection on {0..domain_size-1}; the element type of vertex-permutation groups.

    Composition reads left to right, like Permutation: ``(a * b)(v) == b(a(v))``.
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError("not a bijection on the domain")

    @staticmethod
    def identity(domain_size: int) -> "VertexMap":
        return VertexMap(tuple(range(domain_size)))

    @staticmethod
    def from_array(arr) -> "VertexMap":
        return VertexMap(tuple(int(x) for x in arr))

    @property
    def domain_size(self) -> int:
        return len(self.images)

    @property
    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images))

    def __call__(self, v: int) -> int:
        return self.images[v]

    def fixes(self, v: int) -> bool:
        return self.images[v] == v

    def as_array(self) -> np.ndarray:
        return np.array(self.images, dtype=_DTYPE)

    def __mul__(self, other: "VertexMap") -> "VertexMap":
        if not isinstance(other, VertexMap):
            return NotImplemented
        if other.domain_size != self.domain_size:
            raise ValueError("domain size mismatch")
        return VertexMap(tuple(other.images[x] for x in self.images))

    def inverse(self) -> "VertexMap":
        img = [0] * len(self.images)
        for i, x in enumerate(self.images):
            img[x] = i
        return VertexMap(tuple(img))


class PermGroup:
    """A group of VertexMaps, stored as generators plus (optionally) the full
    element set.

    Elements are kept as compact byte strings internally; iteration yields
    VertexMaps in a deterministic order.
    """

    def __init__(
        self,
        domain_size: int,
        generators: Iterable[VertexMap] = (),
        element_bytes: Optional[frozenset[bytes]] = None,
        cap: Optional[int] = None,
    ):
        self.domain_size = domain_size
        self.generators = tuple(generators)
        for g in self.generators:
            if g.domain_size != domain_size:
                raise ValueError("generator domain size mismatch")
        self._elements = element_bytes
        self.cap = effective_cap() if cap is None else cap

    # ------------------------------------------------------------------
    # construction

    @classmethod
    def closure(cls, generators: Iterable[VertexMap], cap: Optional[int] = None) -> "PermGroup":
        """Materialize the group generated by the given maps.

        Plain breadth-first closure over right products; raises CapExceeded
        (never truncates silently) if more than cap elements appear.
        """
        if cap is None:
            cap = effective_cap()
        gens = list(generators)
        if not gens:
            raise ValueError("closure needs at least one generator")
        dom = gens[0].domain_size
        garrs = [g.as_array() for g in gens]
        ident = np.arange(dom, dtype=_DTYPE)
        elements = {_encode(ident)}
        frontier = [ident]
        while frontier:
            nxt = []
            for f in frontier:
                for g in garrs:
                    prod = g[f]
                    b = _encode(prod)
                    if b not in elements:
                        if len(elements) >= cap:
                            raise CapExceeded(
                                f"group closure exceeded cap of {cap} elements"
                            )
                        elements.add(b)
                        nxt.append(prod)
            frontier = nxt
        return cls(dom, generators=tuple(gens), element_bytes=frozenset(elements), cap=cap)

    @classmethod
    def from_maps(
        cls,
        domain_size: int,
        maps: Iterable,
        generators: Optional[Iterable[VertexMap]] = None,
    ) -> "PermGroup":
        """Group from an explicit element list (assumed closed; verified lazily in tests)."""
        elements = set()
        vmaps = []
        for m in maps:
            vm = m if isinstance(m, VertexMap) else VertexMap.from_array(m)
            vmaps.append(vm)
            elements.add(_encode(vm.as_array()))
        ident = _encode(np.arange(domain_size, dtype=_DTYPE))
        elements.add(ident)
        if generators is None:
            generators = tuple(v for v in vmaps if not v.is_identity)
        return cls(domain_size, generators=generators, element_bytes=frozenset(elements))

    @classmethod
    def trivial(cls, domain_size: int) -> "PermGroup":
        ident = VertexMap.identity(domain_size)
        return cls.from_maps(domain_size, [ident], generators=())

    # ------------------------------------------------------------------
    # queries

    def _materialize(self) -> frozenset[bytes]:
        if self._elements is None:
            if not self.generators:
                self._elements = PermGroup.trivial(self.domain_size)._elements
            else:
                self._elements = PermGroup.closure(self.generators, self.cap)._elements
        return self._elements

    @property
    def is_materialized(self) -> bool:
        return self._elements is not None

    @property
    def element_bytes(self) -> frozenset[bytes]:
        return self._materialize()

    @property
    def order(self) -> int:
        return len(self._materialize())

    def element_matrix(self) -> np.ndarray:
        """All elements as a (order x domain_size) array, rows in byte order."""
        rows = sorted(self._materialize())
        return np.frombuffer(b"".join(rows), dtype=_DTYPE).reshape(len(rows), self.domain_size)

    def maps(self) -> Iterator[VertexMap]:
        for raw in sorted(self._materialize()):
            yield VertexMap(tuple(int(x) for x in _decode(raw)))

    def contains(self, m) -> bool:
        arr = m.as_array() if isinstance(m, VertexMap) else np.asarray(m)
        if arr.shape[0] != self.domain_size:
            raise ValueError("domain size mismatch")
        return _encode(arr) in self._materialize()

    def __contains__(self, m) -> bool:
        return self.contains(m)

    def __len__(self) -> int:
        return self.order

    def __iter__(self) -> Iterator[VertexMap]:
        return self.maps()

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.element_bytes <= other.element_bytes

    def report(self) -> dict:
        return {
            "order": self.order,
            "n_generators": len(self.generators),
            "domain_size": self.domain_size,
            "generators": [list(g.images) for g in self.generators],
        }


@dataclass(frozen=True)
class NormalityCheck:
    """Outcome of a normality test, with a certificate on failure.

    witness is (g, n, g^-1 n g) with the conjugate outside the subgroup.
    """

    normal: bool
    witness: Optional[tuple[VertexMap, VertexMap, VertexMap]] = None


def is_normal_in(sub: PermGroup, group: PermGroup) -> NormalityCheck:
    """Whether sub is normal in group; conjugates sub by every generator of group.

    For finite groups, invariance under a generating set implies invariance
    under the whole group.
    """
    if sub.domain_size != group.domain_size:
        raise ValueError("domain size mismatch")
    if not sub.is_subgroup_of(group):
        raise ValueError("first group is not contained in the second")
    sub_bytes = sub.element_bytes
    sub_mat = sub.element_matrix()
    for g in group.generators:
        garr = g.as_array()
        ginv = g.inverse().as_array()
        # conj[k] = g^-1 then n_k then g
        conj = garr[sub_mat[:, ginv]]
        for k in range(conj.shape[0]):
            if _encode(conj[k]) not in sub_bytes:
                n_map = VertexMap(tuple(int(x) for x in sub_mat[k]))
                c_map = VertexMap(tuple(int(x) for x in conj[k]))
                return NormalityCheck(False, (g, n_map, c_map))
    return NormalityCheck(True, None)


def is_right_translation(X: "CayleyGraph", m: VertexMap) -> Optional[Permutation]:
    """The permutation sigma with m(alpha) = alpha * sigma for every vertex,
    if m is a right translation of the Cayley graph; None otherwise."""
    if m.domain_size != X.vertex_count:
        raise ValueError("domain size mismatch")
    sigma = X.vertex(m.images[X.identity_index])
    expected = X.right_action_array(sigma)
    if all(int(a) == b for a, b in zip(expected, m.images)):
        return sigma
    return None
