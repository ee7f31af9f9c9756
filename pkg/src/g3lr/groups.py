"""Finitely generated abelian groups used as grading groups.

A group is described by a sequence of moduli, one per cyclic factor.
A modulus m >= 2 gives a cyclic factor of order m, a modulus 0 gives an
infinite cyclic factor.  Elements carry one integer coordinate per
factor and are kept normalized (0 <= c < m for finite factors).

The group law is written multiplicatively in the mathematics this
package implements, but coordinates are additive; `mul` adds
coordinates componentwise.

    >>> G = GroupSpec((2, 2))
    >>> a = G.elem((1, 0)); b = G.elem((0, 1))
    >>> a.mul(b).coords
    (1, 1)
    >>> a.mul(a).is_identity()
    True
    >>> Z = GroupSpec((0,))
    >>> Z.elem((3,)).mul(Z.elem((-5,))).coords
    (-2,)
    >>> G3 = GroupSpec((3,))
    >>> G3.elem((1,)).inv().coords
    (2,)
"""


class GroupSpec:
    """Moduli of the cyclic factors.  No modulus may equal 1; the empty
    sequence is the trivial group."""

    def __init__(self, moduli):
        moduli = tuple(int(m) for m in moduli)
        for m in moduli:
            if m < 0 or m == 1:
                raise ValueError("modulus must be 0 or >= 2, got %r" % (m,))
        self.moduli = moduli

    def __eq__(self, other):
        return isinstance(other, GroupSpec) and self.moduli == other.moduli

    def __hash__(self):
        return hash(("GroupSpec", self.moduli))

    def __repr__(self):
        return "GroupSpec(%r)" % (self.moduli,)

    def elem(self, coords):
        return GroupElem(self, coords)

    def identity(self):
        return GroupElem(self, (0,) * len(self.moduli))


class GroupElem:
    """A normalized element of a GroupSpec.  Immutable and hashable."""

    __slots__ = ("spec", "coords")

    def __init__(self, spec, coords):
        coords = tuple(int(c) for c in coords)
        if len(coords) != len(spec.moduli):
            raise ValueError(
                "coordinate length %d does not match group arity %d"
                % (len(coords), len(spec.moduli)))
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "coords", tuple(
            c % m if m else c for c, m in zip(coords, spec.moduli)))

    def __setattr__(self, name, value):
        raise AttributeError("GroupElem is immutable")

    def mul(self, other):
        if self.spec != other.spec:
            raise ValueError("elements of different groups")
        return GroupElem(self.spec, tuple(
            a + b for a, b in zip(self.coords, other.coords)))

    def inv(self):
        return GroupElem(self.spec, tuple(-c for c in self.coords))

    def is_identity(self):
        return all(c == 0 for c in self.coords)

    def __eq__(self, other):
        return (isinstance(other, GroupElem)
                and self.spec == other.spec and self.coords == other.coords)

    def __hash__(self):
        return hash((self.spec.moduli, self.coords))

    def __repr__(self):
        return "GroupElem%r" % (self.coords,)


def product_many(spec, elems):
    """Product of a sequence of elements; identity for the empty sequence."""
    acc = spec.identity()
    for e in elems:
        acc = acc.mul(e)
    return acc
