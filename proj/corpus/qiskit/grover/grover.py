"""Grover search over three qubits, marked state |101>, two iterations."""
import math

from qiskit import QuantumCircuit, transpile
from qiskit.circuit.library import MCXGate
from qiskit_aer import AerSimulator

N = 3
MARKED = "101"
ITERATIONS = 2


def phase_oracle(n, marked):
    qc = QuantumCircuit(n, name="oracle")
    zeros = [i for i, bit in enumerate(reversed(marked)) if bit == "0"]
    if zeros:
        qc.x(zeros)
    qc.h(n - 1)
    qc.append(MCXGate(n - 1), list(range(n)))
    qc.h(n - 1)
    if zeros:
        qc.x(zeros)
    return qc


def diffuser(n):
    qc = QuantumCircuit(n, name="diffuser")
    qc.h(range(n))
    qc.x(range(n))
    qc.h(n - 1)
    qc.append(MCXGate(n - 1), list(range(n)))
    qc.h(n - 1)
    qc.x(range(n))
    qc.h(range(n))
    return qc


def grover(n, marked, iterations):
    qc = QuantumCircuit(n, n)
    qc.h(range(n))
    oracle = phase_oracle(n, marked)
    diffusion = diffuser(n)
    for _ in range(iterations):
        qc.compose(oracle, inplace=True)
        qc.compose(diffusion, inplace=True)
    qc.measure(range(n), range(n))
    return qc


optimal = math.floor(math.pi / 4 * math.sqrt(2 ** N))
if optimal != ITERATIONS:
    print("note: optimal iteration count is", optimal)

simulator = AerSimulator()
circuit = transpile(grover(N, MARKED, ITERATIONS), simulator)
counts = simulator.run(circuit, shots=2048).result().get_counts()
ranked = sorted(counts.items(), key=lambda kv: kv[1], reverse=True)
for state, hits in ranked:
    marker = " <- marked" if state == MARKED else ""
    print(f"{state}: {hits}{marker}")
found = ranked[0][0]
if found == MARKED:
    print("found", found, "with probability", ranked[0][1] / 2048)
else:
    print("search failed, got", found)
