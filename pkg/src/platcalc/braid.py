"""Braid words on a fixed number of strands.

A letter is a signed generator index: +k is ``s<k>`` (the strand
entering at position k crosses over position k+1), -k is ``S<k>``.
Words read bottom to top.  Token syntax: whitespace-separated ``s3``
/ ``S3`` tokens, ``-`` for the empty word.
"""

from __future__ import annotations

from dataclasses import dataclass

from platcalc.errors import ParseError, StrandMismatch


@dataclass(frozen=True)
class BraidWord:
    strand_count: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strand_count < 1:
            raise ValueError("strand_count must be positive")
        for g in self.letters:
            if g == 0 or abs(g) >= self.strand_count:
                raise ValueError(f"letter {g} out of range for {self.strand_count} strands")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.strand_count != self.strand_count:
            raise StrandMismatch(
                f"cannot concatenate words on {self.strand_count} and {other.strand_count} strands"
            )
        return BraidWord(self.strand_count, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strand_count, tuple(-g for g in reversed(self.letters)))

    def append(self, *letters: int) -> "BraidWord":
        return BraidWord(self.strand_count, self.letters + tuple(letters))

    def power(self, k: int) -> "BraidWord":
        base = self if k >= 0 else self.inverse()
        return BraidWord(self.strand_count, base.letters * abs(k))

    def shift(self, offset: int, strand_count: int) -> "BraidWord":
        """Re-index letters by +offset on a wider set of strands."""
        return BraidWord(strand_count, tuple(g + offset if g > 0 else g - offset for g in self.letters))

    def embed(self, strand_count: int) -> "BraidWord":
        """Same letters on a wider strand set."""
        if strand_count < self.strand_count:
            raise StrandMismatch("cannot embed into fewer strands")
        return BraidWord(strand_count, self.letters)

    def free_reduce(self) -> "BraidWord":
        """Cancel adjacent inverse pairs to a fixpoint."""
        out: list[int] = []
        for g in self.letters:
            if out and out[-1] == -g:
                out.pop()
            else:
                out.append(g)
        return BraidWord(self.strand_count, tuple(out))

    def permutation(self) -> tuple[int, ...]:
        """perm[p-1] is the top position of the strand entering at bottom position p."""
        at = list(range(self.strand_count + 1))  # position -> strand (named by entry position)
        for g in self.letters:
            i = abs(g)
            at[i], at[i + 1] = at[i + 1], at[i]
        out = [0] * (self.strand_count + 1)
        for p in range(1, self.strand_count + 1):
            out[at[p]] = p
        return tuple(out[1:])

    def writhe_sum(self) -> int:
        """Sum of letter signs (all-parallel writhe of the braid closure)."""
        return sum(1 if g > 0 else -1 for g in self.letters)

    def tokens(self) -> str:
        if not self.letters:
            return "-"
        return " ".join(f"s{g}" if g > 0 else f"S{-g}" for g in self.letters)

    @classmethod
    def from_tokens(cls, text: str, strand_count: int, line: int = 1) -> "BraidWord":
        text = text.strip()
        if text in ("", "-"):
            return cls(strand_count)
        letters = []
        for tok in text.split():
            if len(tok) < 2 or tok[0] not in "sS" or not tok[1:].isdigit():
                raise ParseError(line, f"bad braid token {tok!r}")
            k = int(tok[1:])
            if k < 1 or k >= strand_count:
                raise ParseError(line, f"generator index {k} out of range 1..{strand_count - 1}")
            letters.append(k if tok[0] == "s" else -k)
        return cls(strand_count, tuple(letters))

    def __str__(self) -> str:
        return self.tokens()


def identity(strand_count: int) -> BraidWord:
    return BraidWord(strand_count)


def transport_to(position: int, target: int, strand_count: int) -> BraidWord:
    """Positive word sliding the strand end at `position` to `target`.

    Used as the canonical conjugator bringing an attach puncture to the
    basepoint column.
    """
    if position == target:
        return BraidWord(strand_count)
    if position < target:
        letters = tuple(range(position, target))
    else:
        letters = tuple(range(position - 1, target - 1, -1))
    return BraidWord(strand_count, letters)
