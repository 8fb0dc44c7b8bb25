"""Independent brute-force reference implementations, used only for checking.

Everything here works on plain tuples-of-tuples and itertools so the checks
stay independent of the library's own search and generation code.
"""

import itertools

Rows = tuple  # tuple[tuple[int, ...], ...]


def relabel(rows, order):
    """Matrix obtained by placing original node order[a] at position a."""
    p = len(rows)
    return tuple(tuple(rows[order[a]][order[b]] for b in range(p)) for a in range(p))


def brute_canonical(rows):
    """Minimum relabeling by exhaustive search over all p! orderings."""
    return min(relabel(rows, order) for order in itertools.permutations(range(len(rows))))


def brute_aut_order(rows):
    """Number of orderings that leave the matrix unchanged."""
    return sum(
        1
        for order in itertools.permutations(range(len(rows)))
        if relabel(rows, order) == rows
    )


def brute_orbit_size(rows):
    """Number of distinct relabelings."""
    return len({relabel(rows, order) for order in itertools.permutations(range(len(rows)))})


def brute_words(p, d):
    """Every configuration word, by deduplicating raw permutations."""
    base = tuple(s for s in range(1, p + 1) for _ in range(d))
    return sorted(set(itertools.permutations(base)))


def brute_word_matrix(word, p, d):
    """Independent projection: count each symbol's occurrences per target block."""
    rows = [[0] * p for _ in range(p)]
    for pos, symbol in enumerate(word):
        rows[symbol - 1][pos // d] += 1
    return tuple(tuple(r) for r in rows)


def brute_matrix_word_counts(p, d):
    """Tally of words per projected matrix, fully by brute force."""
    counts = {}
    for word in brute_words(p, d):
        key = brute_word_matrix(word, p, d)
        counts[key] = counts.get(key, 0) + 1
    return counts


def brute_regular_matrices(p, d):
    """All p x p grids with row and column sums d, by scanning every entry grid.

    Exponential in p*p; keep p <= 3.
    """
    found = []
    for values in itertools.product(range(d + 1), repeat=p * p):
        rows = tuple(values[i * p : (i + 1) * p] for i in range(p))
        if all(sum(r) == d for r in rows) and all(sum(c) == d for c in zip(*rows)):
            found.append(rows)
    return found
