"""Simon's algorithm in Qrisp with hidden string 101."""
from qrisp import QuantumVariable, h, cx

SECRET = "101"


def simon_oracle(inp, out, secret):
    cx(inp, out)
    pivot = secret.index("1")
    for i, bit in enumerate(secret):
        if bit == "1":
            cx(inp[pivot], out[i])


def dot(a, b):
    return sum(int(p) * int(q) for p, q in zip(a, b)) % 2


inp = QuantumVariable(len(SECRET))
out = QuantumVariable(len(SECRET))
h(inp)
simon_oracle(inp, out, SECRET)
h(inp)
samples = inp.get_measurement()

equations = [y for y in samples if y != "0" * len(SECRET)]
candidates = [format(k, "03b") for k in range(1, 8)]
solutions = [c for c in candidates if all(dot(c, y) == 0 for y in equations)]
print("equations:", equations)
print("hidden string:", solutions)
