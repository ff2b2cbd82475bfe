"""Did-you-mean hints for check, map and family names.

Registry names are hyphenated (``tau-symplectic``, ``h-winding``), so a
query also matches a name when each of its hyphen-separated parts is a
prefix of the corresponding part of the name: ``tau-sym`` finds
``tau-symplectic``.
"""

from collections.abc import Iterable

PREFIX_SIMILARITY = 0.9


def levenshtein_distance(s1: str, s2: str) -> int:
    """Number of single-character insertions, deletions and substitutions."""
    row = list(range(len(s2) + 1))
    for i, c1 in enumerate(s1, 1):
        previous, row[0] = row[0], i
        for j, c2 in enumerate(s2, 1):
            previous, row[j] = row[j], min(row[j] + 1, row[j - 1] + 1, previous + (c1 != c2))
    return row[-1]


def _similarity(word: str, name: str) -> float:
    word, name = word.lower(), name.lower()
    score = 1.0 - levenshtein_distance(word, name) / max(len(word), len(name))
    parts, name_parts = word.split("-"), name.split("-")
    if len(parts) <= len(name_parts) and all(
        candidate.startswith(part) for part, candidate in zip(parts, name_parts)
    ):
        score = max(score, PREFIX_SIMILARITY)
    return score


def find_close_matches(
    word: str, possibilities: Iterable[str], n: int = 3, cutoff: float = 0.5
) -> list[str]:
    """Up to ``n`` names with similarity >= cutoff, best first, ties by name."""
    if not word:
        return []
    scored = sorted(
        (-_similarity(word, name), name)
        for name in possibilities
        if _similarity(word, name) >= cutoff
    )
    return [name for _, name in scored[:n]]


def suggest_did_you_mean(word: str, possibilities: Iterable[str]) -> str | None:
    """A "Did you mean?" hint, or None when nothing is close."""
    matches = find_close_matches(word, possibilities)
    if not matches:
        return None
    if len(matches) == 1:
        return f"Did you mean '{matches[0]}'?"
    return "Did you mean one of: '" + "', '".join(matches) + "'?"
