"""Deutsch-Jozsa with Cirq: three input qubits plus one ancilla."""
import cirq

N = 3
qubits = cirq.LineQubit.range(N)
ancilla = cirq.LineQubit(N)


def constant_oracle(value):
    if value == 1:
        yield cirq.X(ancilla)


def balanced_oracle(mask="101"):
    flips = [q for q, bit in zip(qubits, mask) if bit == "1"]
    yield [cirq.X(q) for q in flips]
    for q in qubits:
        yield cirq.CNOT(q, ancilla)
    yield [cirq.X(q) for q in flips]


def deutsch_jozsa(oracle):
    circuit = cirq.Circuit()
    circuit.append([cirq.X(ancilla), cirq.H(ancilla)])
    circuit.append(cirq.H.on_each(*qubits))
    circuit.append(oracle)
    circuit.append(cirq.H.on_each(*qubits))
    circuit.append(cirq.measure(*qubits, key="result"))
    return circuit


simulator = cirq.Simulator()
oracles = {
    "constant-0": list(constant_oracle(0)),
    "constant-1": list(constant_oracle(1)),
    "balanced": list(balanced_oracle()),
}
for name, oracle in oracles.items():
    circuit = deutsch_jozsa(oracle)
    result = simulator.run(circuit, repetitions=100)
    histogram = result.histogram(key="result")
    if histogram[0] == 100:
        verdict = "constant"
    elif 0 not in histogram:
        verdict = "balanced"
    else:
        verdict = "undetermined"
    print(f"{name}: {verdict}")
    print(circuit)
