#!/usr/bin/env python3
"""Writes the first COUNT bits of the binary expansion of e ("10.1011...")
packed MSB-first, the stream used as the NIST SP 800-22 sample "data.e".

usage: e_bits.py OUT [COUNT]
"""
import sys

import mpmath


def e_bits(count):
    mpmath.mp.prec = count + 64
    scaled = int(mpmath.floor(mpmath.e * mpmath.mpf(2) ** (count - 2)))
    bits = bin(scaled)[2:]
    assert bits.startswith("10")
    return bits[:count]


def main():
    out = sys.argv[1]
    count = int(sys.argv[2]) if len(sys.argv) > 2 else 1_000_000
    bits = e_bits(count)
    with open(out, "wb") as fh:
        padded = bits + "0" * (-count % 8)
        fh.write(int(padded, 2).to_bytes(len(padded) // 8, "big"))


if __name__ == "__main__":
    main()
