"""Pure-Python twin of the compiled Gray-code kernels (same signatures)."""
from collections import Counter


def _start_code(delta, base, state):
    code = base
    for k, d in enumerate(delta):
        if (state >> k) & 1:
            code += d
    return code


def gray_code_counts(delta, base, start, stop):
    if stop <= start:
        return {}
    delta = [int(d) for d in delta]
    state = start ^ (start >> 1)
    code = _start_code(delta, base, state)
    counts = Counter()
    counts[code] += 1
    for i in range(start + 1, stop):
        bit = (i & -i).bit_length() - 1
        state ^= 1 << bit
        if (state >> bit) & 1:
            code += delta[bit]
        else:
            code -= delta[bit]
        counts[code] += 1
    return dict(counts)


def gray_code_match(delta, base, start, stop, target):
    if stop <= start:
        return 0
    delta = [int(d) for d in delta]
    state = start ^ (start >> 1)
    code = _start_code(delta, base, state)
    hits = int(code == target)
    for i in range(start + 1, stop):
        bit = (i & -i).bit_length() - 1
        state ^= 1 << bit
        if (state >> bit) & 1:
            code += delta[bit]
        else:
            code -= delta[bit]
        if code == target:
            hits += 1
    return hits
