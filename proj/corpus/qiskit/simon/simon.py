"""Simon's algorithm for the hidden string s = 101."""
import numpy as np
from qiskit import QuantumCircuit, transpile
from qiskit_aer import AerSimulator

SECRET = "101"


def simon_oracle(s):
    n = len(s)
    qc = QuantumCircuit(2 * n)
    # copy the input register
    for i in range(n):
        qc.cx(i, n + i)
    # fold with s on the lowest set bit
    pivot = s[::-1].index("1")
    for i, bit in enumerate(reversed(s)):
        if bit == "1":
            qc.cx(pivot, n + i)
    return qc


def simon_circuit(s):
    n = len(s)
    qc = QuantumCircuit(2 * n, n)
    qc.h(range(n))
    qc.compose(simon_oracle(s), inplace=True)
    qc.h(range(n))
    qc.measure(range(n), range(n))
    return qc


def dot(a, b):
    return sum(int(x) * int(y) for x, y in zip(a, b)) % 2


simulator = AerSimulator()
circuit = transpile(simon_circuit(SECRET), simulator)
counts = simulator.run(circuit, shots=1024).result().get_counts()
equations = [z for z in counts if z != "0" * len(SECRET)]
for z in equations:
    print(f"{SECRET}.{z} = {dot(SECRET, z)} (mod 2)")
candidates = [format(i, "03b") for i in range(1, 2 ** len(SECRET))]
solutions = [c for c in candidates if all(dot(c, z) == 0 for z in equations)]
print("candidates for s:", solutions, np.array(solutions).size)
