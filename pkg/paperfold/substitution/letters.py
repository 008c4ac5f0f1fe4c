# encoding: utf-8
""" Semi-cubes, the tiles of the paperfolding substitution.

A semi-cube is a half-open unit cube. It owns the d faces through its lowest
corner, its reference point, and nothing else, so a box of semi-cubes owns
every face of the grid exactly once. A tile type records the sign of the
crease on each owned face and the parity of each coordinate of the
reference point: 2^d · 2^d = 4^d letters in all.

Letters are coded as integers, `(crest bits << d) | parity bits`, with axis 1
in the least significant position of each group and a crest bit set when
the face is a crest.
"""
from typing import Iterable, Tuple

from ..creases import Sign

__all__ = ["Letter", "alphabet_size"]


def alphabet_size(d: int) -> int:
    return 4 ** d


class Letter(object):
    """A tile type: the signs of its d lower faces and the parity of its position.

    Attributes
    ----------
    face_signs: tuple of Sign
        Sign of the lower face perpendicular to each axis.
    parity: tuple of int
        Parity bit of each coordinate of the reference point.

    Examples
    --------
    >>> Letter((Sign.CREST,), (1,)).code
    3
    >>> Letter.from_code(2, 6)
    Letter(face_signs=('-', '+'), parity=(0, 1))
    """

    __slots__ = ("face_signs", "parity")

    def __init__(self, face_signs: Iterable[Sign], parity: Iterable[int]) -> None:
        self.face_signs: Tuple[Sign, ...] = tuple(Sign(int(s)) for s in face_signs)
        self.parity: Tuple[int, ...] = tuple(int(p) for p in parity)
        if len(self.face_signs) != len(self.parity) or not self.parity:
            raise ValueError(
                """A letter needs as many face signs as parity bits, got {} and {}.""".format(
                    len(self.face_signs), len(self.parity)
                )
            )
        if any(p not in (0, 1) for p in self.parity):
            raise ValueError("Parity bits are 0 or 1, got {}.".format(self.parity))

    @property
    def d(self) -> int:
        return len(self.parity)

    @property
    def code(self) -> int:
        crests = sum(1 << i for i, s in enumerate(self.face_signs) if s is Sign.CREST)
        parity = sum(p << i for i, p in enumerate(self.parity))
        return (crests << self.d) | parity

    @classmethod
    def from_code(cls, d: int, code: int) -> "Letter":
        if not 0 <= code < alphabet_size(d):
            raise ValueError(
                "Letter codes in dimension {} lie in 0..{}, got {}.".format(
                    d, alphabet_size(d) - 1, code
                )
            )
        parity = [(code >> i) & 1 for i in range(d)]
        crests = code >> d
        signs = [Sign.CREST if (crests >> i) & 1 else Sign.VALLEY for i in range(d)]
        return cls(signs, parity)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Letter):
            return NotImplemented
        return self.face_signs == other.face_signs and self.parity == other.parity

    def __hash__(self) -> int:
        return hash((self.face_signs, self.parity))

    def __repr__(self) -> str:
        return "Letter(face_signs={}, parity={})".format(
            tuple(str(s) for s in self.face_signs), self.parity
        )
