"""Profile and solution text formats, plus a PrefLib importer.

Profile file::

    3 2
    #names: alice,bob,carol
    0,1,2
    2,1,0

The first line is ``m n``; the optional ``#names:`` line labels the
candidates; each following line is one vote, most preferred first. Solution
lines are ``score<TAB>a>b>c`` using labels when the profile has them.
"""

from __future__ import annotations

import re

from .core import Profile
from .errors import ProfileFormatError

NAMES_PREFIX = "#names:"


def parse_profile(text: str) -> Profile:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ProfileFormatError("empty profile", line=1)
    header = lines[0].split()
    if len(header) != 2 or not all(h.isdigit() for h in header):
        raise ProfileFormatError(f"expected 'm n', got {lines[0]!r}", line=1)
    m, n = int(header[0]), int(header[1])
    if m < 1 or n < 1:
        raise ProfileFormatError("m and n must be positive", line=1)
    body = 1
    names = None
    if len(lines) > 1 and lines[1].startswith(NAMES_PREFIX):
        names = [s.strip() for s in lines[1][len(NAMES_PREFIX):].split(",")]
        if len(names) != m:
            raise ProfileFormatError(f"expected {m} names, got {len(names)}", line=2)
        body = 2
    vote_lines = lines[body:]
    if len(vote_lines) != n:
        raise ProfileFormatError(f"expected {n} votes, got {len(vote_lines)}", line=body + min(len(vote_lines), n) + 1)
    votes = []
    for offset, raw in enumerate(vote_lines):
        lineno = body + offset + 1
        fields = [f.strip() for f in raw.split(",")]
        try:
            vote = [int(f) for f in fields]
        except ValueError:
            raise ProfileFormatError(f"non-integer candidate in {raw!r}", line=lineno) from None
        if len(vote) != m:
            raise ProfileFormatError(f"expected {m} candidates, got {len(vote)}", line=lineno)
        if len(set(vote)) != m:
            raise ProfileFormatError("duplicate candidate index", line=lineno)
        if any(not 0 <= c < m for c in vote):
            raise ProfileFormatError(f"candidate index out of range 0..{m - 1}", line=lineno)
        votes.append(tuple(vote))
    return Profile(m, tuple(votes), tuple(names) if names else None)


def format_profile(profile: Profile) -> str:
    lines = [f"{profile.m} {profile.n}"]
    if profile.names is not None:
        lines.append(NAMES_PREFIX + ",".join(profile.names))
    lines.extend(",".join(map(str, v)) for v in profile.votes)
    return "\n".join(lines) + "\n"


def read_profile(path) -> Profile:
    with open(path, encoding="utf-8") as fh:
        return parse_profile(fh.read())


def format_solutions(entries, profile: Profile) -> str:
    return "".join(f"{e.score}\t{'>'.join(profile.label(c) for c in e.ranking)}\n" for e in entries)


def parse_ranking_line(text: str, m=None) -> tuple:
    ranking = tuple(int(f) for f in text.strip().split(","))
    if m is not None and len(ranking) != m:
        raise ProfileFormatError(f"expected {m} candidates, got {len(ranking)}")
    if sorted(ranking) != list(range(len(ranking))):
        raise ProfileFormatError(f"not a permutation: {text.strip()!r}")
    return ranking


_PREFLIB_NAME = re.compile(r"#\s*ALTERNATIVE NAME (\d+):\s*(.*)")
_PREFLIB_COUNT = re.compile(r"#\s*NUMBER ALTERNATIVES:\s*(\d+)")


def parse_preflib(text: str) -> Profile:
    """Read a PrefLib strict-order-complete file (``.soc``), current or legacy layout.

    PrefLib numbers alternatives from 1; they are shifted to 0-based indices.
    Vote lines carry a multiplicity, which expands into repeated votes.
    """
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ProfileFormatError("empty PrefLib file", line=1)
    names = {}
    m = None
    data = []
    if lines[0].startswith("#"):
        for lineno, ln in enumerate(lines, start=1):
            if ln.startswith("#"):
                if hit := _PREFLIB_COUNT.match(ln):
                    m = int(hit.group(1))
                elif hit := _PREFLIB_NAME.match(ln):
                    names[int(hit.group(1))] = hit.group(2).strip()
                continue
            if ":" not in ln:
                raise ProfileFormatError(f"expected 'count: order', got {ln!r}", line=lineno)
            count, order = ln.split(":", 1)
            data.append((lineno, count, order))
    else:
        try:
            m = int(lines[0])
        except ValueError:
            raise ProfileFormatError("expected the number of alternatives", line=1) from None
        for lineno in range(2, m + 2):
            idx, _, name = lines[lineno - 1].partition(",")
            names[int(idx)] = name.strip()
        for lineno, ln in enumerate(lines[m + 2:], start=m + 3):
            count, _, order = ln.partition(",")
            data.append((lineno, count, order))
    if m is None:
        raise ProfileFormatError("missing '# NUMBER ALTERNATIVES' header", line=1)
    votes = []
    for lineno, count, order in data:
        if "{" in order:
            raise ProfileFormatError("ties are not supported (strict complete orders only)", line=lineno)
        try:
            vote = tuple(int(x) - 1 for x in order.split(","))
            mult = int(count)
        except ValueError:
            raise ProfileFormatError(f"malformed vote {order!r}", line=lineno) from None
        if sorted(vote) != list(range(m)):
            raise ProfileFormatError("vote is not a complete strict order", line=lineno)
        votes.extend([vote] * mult)
    if not votes:
        raise ProfileFormatError("no votes", line=len(lines))
    labels = tuple(names.get(i + 1, str(i)) for i in range(m)) if names else None
    return Profile(m, tuple(votes), labels)
