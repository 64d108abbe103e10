"""Pure-Python subset-sum kernel (reference and fallback for ``_kernel``).

Both implementations share one contract::

    subset_type_sums(n, kinds, us, vs) -> {encoded_type: signed_count}

``kinds[k]`` is 0 (positive edge), 1 (negative edge) or 2 (loop);
``us[k], vs[k]`` are 0-based endpoints (``us[k] == vs[k]`` for loops).
The result maps the byte encoding ``bytes([u, a1, b1, a2, b2, ...])`` of
``type(S)`` (canonical column order) to ``sum (-1)^|S|`` over the subsets
``S`` of that type.
"""


def encode_type(u, columns):
    """Byte key for ``u`` and already-canonical ``columns``."""
    out = bytearray([u])
    for a, b in columns:
        out.append(a)
        out.append(b)
    return bytes(out)


def decode_type(key):
    return key[0], tuple((key[i], key[i + 1]) for i in range(1, len(key), 2))


def subset_type_sums(n, kinds, us, vs):
    m = len(kinds)
    edges = list(zip(kinds, us, vs))
    acc = {}
    for mask in range(1 << m):
        parent = list(range(n))
        parity = [0] * n
        bad = [False] * n
        sign = 1
        for k in range(m):
            if not (mask >> k) & 1:
                continue
            sign = -sign
            kind, i, j = edges[k]
            # find with parity
            pi = 0
            while parent[i] != i:
                pi ^= parity[i]
                i = parent[i]
            if kind == 2:
                bad[i] = True
                continue
            pj = 0
            while parent[j] != j:
                pj ^= parity[j]
                j = parent[j]
            if i == j:
                if pi ^ pj != kind:
                    bad[i] = True
            else:
                if i > j:
                    i, j = j, i
                parent[j] = i
                parity[j] = pi ^ pj ^ kind
                bad[i] = bad[i] or bad[j]
        u = 0
        sides = {}
        for v in range(n):
            r, p = v, 0
            while parent[r] != r:
                p ^= parity[r]
                r = parent[r]
            if bad[r]:
                u += 1
            else:
                c = sides.get(r)
                if c is None:
                    c = sides[r] = [0, 0]
                c[p] += 1
        cols = sorted(((a, b) if a >= b else (b, a) for a, b in sides.values()), reverse=True)
        key = encode_type(u, cols)
        acc[key] = acc.get(key, 0) + sign
    return {k: v for k, v in acc.items() if v}
