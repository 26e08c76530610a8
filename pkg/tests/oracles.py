"""Independent reference computations used to freeze expected values.

The face count here walks darts with a local orientation flag, the usual
face-tracing procedure for signed rotation systems.  It shares no code with
the endpoint-matching tracer in the package.
"""

from itertools import combinations


def dart_walk_faces(word):
    word = list(word)
    length = len(word)
    if length == 0:
        return 1
    where = {}
    for i, x in enumerate(word):
        where.setdefault(abs(x), []).append(i)
    partner = [0] * length
    for i, j in where.values():
        partner[i], partner[j] = j, i
    seen = set()
    orbits = 0
    for h0 in range(length):
        for e0 in (1, -1):
            if (h0, e0) in seen:
                continue
            orbits += 1
            h, e = h0, e0
            while (h, e) not in seen:
                seen.add((h, e))
                other = partner[h]
                twist = 1 if (word[h] > 0) == (word[other] > 0) else -1
                e = e * twist
                h = (other + e) % length
    assert orbits % 2 == 0
    return orbits // 2


def oracle_genus(word):
    return 1 + len(word) // 2 - dart_walk_faces(word)


def oracle_polynomial(word):
    """Twist every subset by hand (negate the first occurrence) and tally genus."""
    word = list(word)
    labels = sorted({abs(x) for x in word})
    coeffs = {}
    for k in range(len(labels) + 1):
        for subset in combinations(labels, k):
            twisted = list(word)
            for label in subset:
                i = next(i for i, x in enumerate(twisted) if abs(x) == label)
                twisted[i] = -twisted[i]
            d = oracle_genus(twisted)
            coeffs[d] = coeffs.get(d, 0) + 1
    return dict(sorted(coeffs.items()))
