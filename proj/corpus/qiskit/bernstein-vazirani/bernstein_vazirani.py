from qiskit import QuantumCircuit, transpile
from qiskit_aer import AerSimulator

SECRET = "1101"


def bernstein_vazirani(secret):
    n = len(secret)
    qc = QuantumCircuit(n + 1, n)
    qc.x(n)
    qc.h(range(n + 1))
    # oracle: CNOT from every qubit whose secret bit is 1
    for i, bit in enumerate(reversed(secret)):
        if bit == "1":
            qc.cx(i, n)
    qc.h(range(n))
    qc.measure(range(n), range(n))
    return qc


simulator = AerSimulator()
circuit = transpile(bernstein_vazirani(SECRET), simulator)
counts = simulator.run(circuit, shots=1).result().get_counts()
print("hidden string:", max(counts, key=counts.get))
