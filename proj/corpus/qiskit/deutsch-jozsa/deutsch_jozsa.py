"""Deutsch-Jozsa on three data qubits and one ancilla."""
from qiskit import QuantumCircuit, transpile
from qiskit_aer import AerSimulator

N = 3


def constant_oracle(n, output=1):
    oracle = QuantumCircuit(n + 1)
    if output == 1:
        oracle.x(n)
    return oracle


def balanced_oracle(n, pattern="101"):
    oracle = QuantumCircuit(n + 1)
    for qubit, bit in enumerate(pattern):
        if bit == "1":
            oracle.x(qubit)
    for qubit in range(n):
        oracle.cx(qubit, n)
    for qubit, bit in enumerate(pattern):
        if bit == "1":
            oracle.x(qubit)
    return oracle


def deutsch_jozsa(oracle, n):
    qc = QuantumCircuit(n + 1, n)
    qc.x(n)
    qc.h(range(n + 1))
    qc.compose(oracle, inplace=True)
    qc.h(range(n))
    qc.measure(range(n), range(n))
    return qc


simulator = AerSimulator()
for name, oracle in [("constant", constant_oracle(N)), ("balanced", balanced_oracle(N))]:
    circuit = transpile(deutsch_jozsa(oracle, N), simulator)
    counts = simulator.run(circuit, shots=1024).result().get_counts()
    verdict = "constant" if "0" * N in counts else "balanced"
    print(name, "->", verdict, counts)
