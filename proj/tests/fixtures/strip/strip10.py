"""Module docstring
spanning two lines."""
import cirq

# allocate
q = cirq.LineQubit(0)
h = cirq.H
h(q)  # apply Hadamard
s = "# not a comment"   

