"""Shadows of k-set families and the real-argument Kruskal-Katona bound.

The shadow of a family A of k-subsets is the family of all (k-1)-subsets
contained in some member.  If |A| = C(x, k) for a real x >= k - 1 (the
binomial extended by its product formula), then |shadow(A)| >= C(x, k-1).
The bound is tight when A consists of the first C(x, k) k-sets in
colexicographic order for an integer x, i.e. all k-subsets of an
x-element prefix.

The text format `turan-fam v1` stores a family:

    turan-fam v1
    m=<int> k=<int>
    s v1 v2 ... vk          (member indices, strictly increasing)
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    FormatError,
    SetFamily,
    _data_lines,
    _parse_header_fields,
    binom_real,
    indices_of,
    mask_of,
)


def shadow_of(fam: SetFamily) -> SetFamily:
    """All (k-1)-subsets contained in a member of the family."""
    if fam.k < 1:
        raise ValueError("the shadow of a family of 0-subsets is undefined")
    out = set()
    for m in fam.members:
        rest = m
        while rest:
            low = rest & -rest
            out.add(m ^ low)
            rest ^= low
    return SetFamily(fam.m, fam.k - 1, tuple(sorted(out)))


def lovasz_x(size: int, k: int) -> float:
    """The unique real x >= k - 1 with C(x, k) = size, by bisection.

    binom_real is strictly increasing on [k - 1, inf); the root is
    bracketed by [k - 1, k - 1 + size] and bisected to 1e-12.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    if size < 0:
        raise ValueError(f"need size >= 0, got {size}")
    if size == 0:
        return float(k - 1)
    lo, hi = float(k - 1), float(k - 1 + size)
    while hi - lo > 1e-12:
        mid = (lo + hi) / 2
        if binom_real(mid, k) < size:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


@dataclass(frozen=True)
class ShadowReport:
    size: int
    x: float
    bound: float
    shadow_size: int
    holds: bool


def check_lovasz_bound(fam: SetFamily) -> ShadowReport:
    """Compare |shadow(A)| against C(x, k-1) at x = lovasz_x(|A|, k).

    The comparison allows the bound a 1e-9 slack in its own favor so
    that float noise cannot flip a true theorem to false.  An empty
    family gets bound 0 (the degenerate x = k - 1 root would claim 1).
    """
    size = fam.size
    x = lovasz_x(size, fam.k)
    bound = binom_real(x, fam.k - 1) if size else 0.0
    shadow_size = shadow_of(fam).size
    return ShadowReport(size, x, bound, shadow_size, shadow_size >= bound - 1e-9)


# --- turan-fam v1 --------------------------------------------------------

_FAM_MAGIC = "turan-fam v1"


def read_family(text: str) -> SetFamily:
    """Parse turan-fam v1; raises FormatError with line numbers."""
    lines = _data_lines(text)
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise FormatError(f"missing `{_FAM_MAGIC}` header") from None
    if line != _FAM_MAGIC:
        raise FormatError(f"expected `{_FAM_MAGIC}` header, got `{line}`", lineno)
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise FormatError("missing `m=<int> k=<int>` line") from None
    m, k = _parse_header_fields(line, lineno, ("m", "k"))
    if m < 0 or k < 0:
        raise FormatError("m and k must be nonnegative", lineno)

    members = []
    seen = set()
    for lineno, line in lines:
        parts = line.split()
        if parts[0] != "s":
            raise FormatError(f"expected a `s` line, got `{parts[0]}`", lineno)
        try:
            idx = [int(p) for p in parts[1:]]
        except ValueError:
            raise FormatError("member indices must be integers", lineno) from None
        if len(idx) != k:
            raise FormatError(f"member has {len(idx)} vertices, expected {k}", lineno)
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise FormatError("member vertices must be strictly increasing", lineno)
        if idx and (idx[0] < 0 or idx[-1] >= m):
            raise FormatError(f"vertex index out of range 0..{m - 1}", lineno)
        mask = mask_of(idx)
        if mask in seen:
            raise FormatError("duplicate member", lineno)
        seen.add(mask)
        members.append(mask)
    return SetFamily(m, k, tuple(sorted(members)))


def write_family(fam: SetFamily) -> str:
    """Serialize to turan-fam v1, members in canonical (sorted mask) order."""
    out = [_FAM_MAGIC, f"m={fam.m} k={fam.k}"]
    for m in fam.members:
        out.append(("s " + " ".join(map(str, indices_of(m)))).rstrip())
    return "\n".join(out) + "\n"
