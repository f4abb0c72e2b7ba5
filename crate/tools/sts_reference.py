"""Independent reference implementation of seven SP 800-22 tests (scipy).

Used out-of-band to produce the frozen golden p-values in
crates/core/tests/data/. Usage:

    python3 tools/sts_reference.py <ascii-01 file> [serial_m] [apen_m]
"""
import sys
import numpy as np
from scipy.special import erfc, gammaincc
from scipy.stats import norm


def monobit(e):
    n = len(e)
    s = np.sum(2 * e.astype(np.int64) - 1)
    return erfc(abs(s) / np.sqrt(n) / np.sqrt(2))


def block_frequency(e, M=128):
    n = len(e)
    N = n // M
    blocks = e[: N * M].reshape(N, M)
    pi = blocks.sum(axis=1) / M
    chi = 4.0 * M * np.sum((pi - 0.5) ** 2)
    return gammaincc(N / 2.0, chi / 2.0)


def runs(e):
    n = len(e)
    pi = e.sum() / n
    if abs(pi - 0.5) >= 2.0 / np.sqrt(n):
        return 0.0
    v = 1 + np.count_nonzero(e[1:] != e[:-1])
    return erfc(abs(v - 2 * n * pi * (1 - pi)) / (2 * np.sqrt(2 * n) * pi * (1 - pi)))


def longest_run(e):
    n = len(e)
    if n < 6272:
        K, M, lo, pis = 3, 8, 1, [0.2148, 0.3672, 0.2305, 0.1875]
    elif n < 750000:
        K, M, lo, pis = 5, 128, 4, [0.1174, 0.2430, 0.2493, 0.1752, 0.1027, 0.1124]
    else:
        K, M, lo, pis = 6, 10000, 10, [0.0882, 0.2092, 0.2483, 0.1933, 0.1208, 0.0675, 0.0727]
    N = n // M
    nu = [0] * (K + 1)
    for b in range(N):
        blk = e[b * M : (b + 1) * M]
        best = cur = 0
        for bit in blk:
            cur = cur + 1 if bit else 0
            best = max(best, cur)
        idx = min(max(best - lo, 0), K)
        nu[idx] += 1
    chi = sum((nu[i] - N * pis[i]) ** 2 / (N * pis[i]) for i in range(K + 1))
    return gammaincc(K / 2.0, chi / 2.0)


def cusum(e, reverse=False):
    n = len(e)
    x = 2 * e.astype(np.int64) - 1
    if reverse:
        x = x[::-1]
    z = np.max(np.abs(np.cumsum(x)))
    s1 = 0.0
    for k in range(int(np.floor((-n / z + 1) / 4)), int(np.floor((n / z - 1) / 4)) + 1):
        s1 += norm.cdf((4 * k + 1) * z / np.sqrt(n)) - norm.cdf((4 * k - 1) * z / np.sqrt(n))
    s2 = 0.0
    for k in range(int(np.floor((-n / z - 3) / 4)), int(np.floor((n / z - 1) / 4)) + 1):
        s2 += norm.cdf((4 * k + 3) * z / np.sqrt(n)) - norm.cdf((4 * k + 1) * z / np.sqrt(n))
    return 1.0 - s1 + s2


def psi2(e, m):
    if m <= 0:
        return 0.0
    n = len(e)
    ext = np.concatenate([e, e[: m - 1]]).astype(np.int64)
    idx = np.zeros(n, dtype=np.int64)
    for i in range(m):
        idx = (idx << 1) | ext[i : i + n]
    counts = np.bincount(idx, minlength=1 << m)
    return (1 << m) / n * np.sum(counts.astype(np.float64) ** 2) - n


def serial(e, m=16):
    d1 = psi2(e, m) - psi2(e, m - 1)
    d2 = psi2(e, m) - 2 * psi2(e, m - 1) + psi2(e, m - 2)
    return gammaincc(2 ** (m - 2), d1 / 2.0), gammaincc(2 ** (m - 3), d2 / 2.0)


def phi(e, m):
    if m == 0:
        return 0.0
    n = len(e)
    ext = np.concatenate([e, e[: m - 1]]).astype(np.int64)
    idx = np.zeros(n, dtype=np.int64)
    for i in range(m):
        idx = (idx << 1) | ext[i : i + n]
    c = np.bincount(idx, minlength=1 << m).astype(np.float64) / n
    c = c[c > 0]
    return np.sum(c * np.log(c))


def approximate_entropy(e, m=10):
    n = len(e)
    apen = phi(e, m) - phi(e, m + 1)
    chi = 2.0 * n * (np.log(2) - apen)
    return gammaincc(2 ** (m - 1), chi / 2.0)


def main():
    bits = np.array([c == "1" for c in open(sys.argv[1]).read().strip()], dtype=np.uint8)
    sm = int(sys.argv[2]) if len(sys.argv) > 2 else 16
    am = int(sys.argv[3]) if len(sys.argv) > 3 else 10
    s1, s2 = serial(bits, sm)
    out = [
        ("monobit", monobit(bits)),
        ("block-frequency", block_frequency(bits)),
        ("runs", runs(bits)),
        ("longest-run", longest_run(bits)),
        ("cusum-forward", cusum(bits)),
        ("cusum-reverse", cusum(bits, True)),
        ("serial-1", s1),
        ("serial-2", s2),
        ("approximate-entropy", approximate_entropy(bits, am)),
    ]
    for name, p in out:
        print(f"{name}\t{p:.12f}")


if __name__ == "__main__":
    main()
