"""Random multipolar drive sequences and their spectra.

A sequence of order n is built from random choices between two n-multipoles,
each the anti-aligned concatenation of two (n-1)-multipoles. The longer the
multipole, the more strongly the low-frequency part of the drive spectrum is
suppressed: the amplitude envelope grows like f^n near zero frequency.
"""

from rmdsim.sequence import envelope_exponent, generate_sequence, multipole

for n in range(4):
    plus = "".join("+" if s > 0 else "-" for s in multipole(n, 1))
    print(f"order {n}: building block {plus}")

seq = generate_sequence(2, 6, seed=7)
print("\nfirst 24 periods of a 2-RMD sequence (seed 7):")
print("".join("+" if s > 0 else "-" for s in seq.polarities))

print("\nlow-frequency envelope exponent, 32 seeds of 4096 blocks:")
for n in range(4):
    print(f"  n={n}: {envelope_exponent(n, 2**12, range(32)):+.3f}")
