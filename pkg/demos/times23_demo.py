"""Diagonal determinism and the base-6 reading of X0 squares."""

from shiftspace.times23 import lambda_encode, multiplication_compatibility_check, verify_diagonal_determinism

for m in range(1, 5):
    print(verify_diagonal_determinism(m).summary())
enc = lambda_encode([1, 0, 3])
print(enc.render())
for line in multiplication_compatibility_check(3).lines():
    print(line)
