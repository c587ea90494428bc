"""Words in the free products Delta = C2*C2*C2 and its index-two subgroup.

Delta is generated by three involutions R0, R1, R2 (letters ``0``, ``1``,
``2``).  The subgroup of words with an even number of R0's is itself a free
product of four involutions

    a = R1,  b = R2,  c = R0 R1 R0,  d = R0 R2 R0

and words over these letters are :class:`BWord` values.  Since every
generator is an involution, a word is reduced exactly when no letter is
repeated consecutively, and the inverse of a word is its reversal.
"""

from __future__ import annotations

import enum
import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

DELTA_LETTERS = "012"
B_LETTERS = "abcd"
IDENTITY_TEXT = "e"

Sigma = tuple[int, int, int]


def _reduce_letters(letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for x in letters:
        if stack and stack[-1] == x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def _coerce(letters, alphabet: str) -> Iterable[int]:
    if isinstance(letters, str):
        text = letters.strip()
        if text == IDENTITY_TEXT:
            return ()
        try:
            return [alphabet.index(ch) for ch in text]
        except ValueError:
            raise ValueError(f"invalid letter in word {letters!r}; expected letters from {alphabet!r}") from None
    out = []
    for x in letters:
        x = int(x)
        if not 0 <= x < len(alphabet):
            raise ValueError(f"letter {x} out of range for alphabet {alphabet!r}")
        out.append(x)
    return out


class _Word:
    alphabet = ""
    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", _reduce_letters(_coerce(self.letters, self.alphabet)))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return type(self)(self.letters + other.letters)

    def inverse(self):
        return type(self)(self.letters[::-1])

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** -k
        return type(self)(self.letters * k)

    def __str__(self):
        if not self.letters:
            return IDENTITY_TEXT
        return "".join(self.alphabet[x] for x in self.letters)

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"

    @classmethod
    def parse(cls, text: str):
        return cls(text)


@dataclass(frozen=True, repr=False)
class DeltaWord(_Word):
    """A reduced word in R0, R1, R2."""

    letters: tuple[int, ...] = ()
    alphabet = DELTA_LETTERS


@dataclass(frozen=True, repr=False)
class BWord(_Word):
    """A reduced word in the free generators a, b, c, d of the bipartite subgroup."""

    letters: tuple[int, ...] = ()
    alphabet = B_LETTERS


def reduce(w):
    """Return the reduced form of ``w``.

    Word objects are always stored reduced and are returned unchanged; any
    other sequence of letters is reduced to a tuple.
    """
    if isinstance(w, _Word):
        return type(w)(w.letters)
    return _reduce_letters(w)


class ThetaClass(enum.Enum):
    """The seven index-two normal subgroups of Delta.

    Each is the kernel of the homomorphism Delta -> C2 sending a word to the
    dot product of its letter counts with ``parity_vector`` (mod 2).
    """

    PLUS = (1, 1, 1)
    HAT0 = (1, 0, 0)
    HAT1 = (0, 1, 0)
    HAT2 = (0, 0, 1)
    SUB0 = (0, 1, 1)
    SUB1 = (1, 0, 1)
    SUB2 = (1, 1, 0)

    @property
    def tag(self) -> str:
        return self.name.lower()

    @property
    def parity_vector(self) -> tuple[int, int, int]:
        return self.value

    @classmethod
    def from_tag(cls, tag: str) -> ThetaClass:
        try:
            return cls[tag.upper()]
        except KeyError:
            raise ValueError(f"unknown subgroup tag {tag!r}") from None


def theta_parity(w: Iterable[int], t: ThetaClass) -> int:
    """0 if the word lies in the subgroup ``t``, 1 otherwise."""
    vec = t.parity_vector
    return sum(vec[x] for x in w) & 1


B_IN_DELTA = (DeltaWord((1,)), DeltaWord((2,)), DeltaWord((0, 1, 0)), DeltaWord((0, 2, 0)))


def embed(bw: BWord) -> DeltaWord:
    """Rewrite a word in a, b, c, d as a word in R0, R1, R2."""
    return DeltaWord(tuple(itertools.chain.from_iterable(B_IN_DELTA[x].letters for x in bw)))


IDENTITY_SIGMA: Sigma = (0, 1, 2)


def parse_sigma(text: str) -> Sigma:
    """Parse a permutation of {0,1,2} in cycle notation without parentheses.

    ``"01"`` is the transposition (0 1), ``"012"`` the 3-cycle 0->1->2->0 and
    ``""`` or ``"e"`` the identity.
    """
    text = text.strip().strip("()")
    if text in ("", IDENTITY_TEXT):
        return IDENTITY_SIGMA
    if len(set(text)) != len(text) or not set(text) <= set(DELTA_LETTERS) or len(text) == 1:
        raise ValueError(f"invalid permutation {text!r}")
    cycle = [int(ch) for ch in text]
    images = list(IDENTITY_SIGMA)
    for i, x in enumerate(cycle):
        images[x] = cycle[(i + 1) % len(cycle)]
    return tuple(images)


def compose_sigma(sigma: Sigma, tau: Sigma) -> Sigma:
    """First ``sigma`` then ``tau`` (permutations act on the right)."""
    return tuple(tau[sigma[i]] for i in range(3))


def invert_sigma(sigma: Sigma) -> Sigma:
    inv = [0, 0, 0]
    for i, j in enumerate(sigma):
        inv[j] = i
    return tuple(inv)


def apply_sigma(w: DeltaWord, sigma: Sigma) -> DeltaWord:
    """Relabel each letter i as sigma[i]."""
    return DeltaWord(tuple(sigma[x] for x in w))


@dataclass(frozen=True)
class EpimorphismSpec:
    """A homomorphism from the bipartite subgroup onto Delta.

    ``images`` are the images of a, b, c, d; ``kernel_relators`` normally
    generate the kernel inside the bipartite subgroup (may be empty).
    """

    name: str
    images: tuple[DeltaWord, DeltaWord, DeltaWord, DeltaWord]
    kernel_relators: tuple[BWord, ...] = ()

    def __post_init__(self):
        images = tuple(w if isinstance(w, DeltaWord) else DeltaWord(w) for w in self.images)
        if len(images) != 4:
            raise ValueError("an epimorphism spec needs exactly four image words")
        relators = tuple(r if isinstance(r, BWord) else BWord(r) for r in self.kernel_relators)
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "kernel_relators", relators)

    def __call__(self, bw: BWord) -> DeltaWord:
        return apply_phi(bw, self)

    def section(self, max_length: int = 6) -> tuple[BWord, BWord, BWord]:
        """Shortest words s_i over a, b, c, d with ``apply_phi(s_i) == R_i``.

        Candidates are scanned by length and then lexicographically, so the
        result is deterministic.
        """
        found: list[BWord | None] = [None, None, None]
        targets = {(i,): i for i in range(3)}
        for length in range(1, max_length + 1):
            for letters in itertools.product(range(4), repeat=length):
                if any(x == y for x, y in zip(letters, letters[1:])):
                    continue
                img = apply_phi(BWord(letters), self).letters
                i = targets.get(img)
                if i is not None and found[i] is None:
                    found[i] = BWord(letters)
            if all(s is not None for s in found):
                return tuple(found)
        missing = [i for i, s in enumerate(found) if s is None]
        raise ValueError(f"{self.name}: no preimage of R{missing} of length <= {max_length}")

    def to_text(self) -> str:
        lines = [str(w) for w in self.images]
        lines += [f"kernel: {r}" for r in self.kernel_relators]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, name: str = "custom") -> EpimorphismSpec:
        """Read four image lines followed by optional ``kernel:`` lines."""
        images, relators = [], []
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line.startswith("kernel:"):
                relators.append(BWord(line[len("kernel:"):].strip()))
            else:
                images.append(DeltaWord(line))
        if len(images) != 4:
            raise ValueError(f"expected 4 image words, found {len(images)}")
        return cls(name, tuple(images), tuple(relators))


def apply_phi(bw: BWord, phi: EpimorphismSpec) -> DeltaWord:
    return DeltaWord(tuple(itertools.chain.from_iterable(phi.images[x].letters for x in bw)))


def _spec(name: str, images: Sequence[str], kernel: Sequence[str]) -> EpimorphismSpec:
    return EpimorphismSpec(name, tuple(DeltaWord(w) for w in images), tuple(BWord(r) for r in kernel))


# Images of a, b, c, d.  Each identifies one generator with a word in the
# other three, so the listed relator generates the kernel.
PHI1 = _spec("phi1", ["1", "2", "0", "2"], ["bd"])
PHI2 = _spec("phi2", ["1", "2", "0", "0"], ["cd"])
PHI3 = _spec("phi3", ["1", "2", "2", "0"], ["bc"])
PHI4 = _spec("phi4", ["1", "2", "0", "1"], ["ad"])
PHI5 = _spec("phi5", ["1", "2", "010", "0"], ["cdad"])

BUILTIN_SPECS = {spec.name: spec for spec in (PHI1, PHI2, PHI3, PHI4, PHI5)}
