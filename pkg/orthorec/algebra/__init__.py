"""
Exact operator algebra: scalars, shift and recurrence operators, fractions
of recurrence operators and differential operators.
"""
