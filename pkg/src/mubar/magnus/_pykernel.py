"""Reference multiplication kernel for packed truncated series.

A monomial ``x_{i1} ... x_{is}`` is packed as the integer whose base
``nvars + 1`` digits, most significant first, are ``i1 + 1, ..., is + 1``;
the empty monomial is 0.  Concatenation is then ``ka * base**len(b) + kb``.
"""


def powers(base, cap):
    pw = [1]
    for _ in range(cap):
        pw.append(pw[-1] * base)
    return pw


def key_length(key, pw):
    s = 0
    while key >= pw[s]:
        s += 1
    return s


def mul(a, b, base, cap):
    pw = powers(base, cap)
    right = sorted((key_length(k, pw), k, c) for k, c in b.items())
    out = {}
    for ka, ca in a.items():
        room = cap - key_length(ka, pw)
        for lb, kb, cb in right:
            if lb >= room:
                break
            k = ka * pw[lb] + kb
            out[k] = out.get(k, 0) + ca * cb
    return {k: v for k, v in out.items() if v}
