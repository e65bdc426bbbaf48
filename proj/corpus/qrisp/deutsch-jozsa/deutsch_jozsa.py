"""Deutsch-Jozsa in Qrisp, 3 data qubits and one ancilla."""
from qrisp import QuantumVariable, QuantumBool, h, x, cx


def constant_oracle(qv, ancilla):
    x(ancilla)


def balanced_oracle(qv, ancilla):
    for i in range(qv.size):
        cx(qv[i], ancilla)


def deutsch_jozsa(oracle, n=3):
    qv = QuantumVariable(n)
    ancilla = QuantumBool()
    x(ancilla)
    h(ancilla)
    h(qv)
    oracle(qv, ancilla)
    h(qv)
    return qv.get_measurement()


for oracle in (constant_oracle, balanced_oracle):
    result = deutsch_jozsa(oracle)
    outcome = max(result, key=result.get)
    kind = "constant" if outcome == "000" else "balanced"
    print(oracle.__name__, kind, result)
