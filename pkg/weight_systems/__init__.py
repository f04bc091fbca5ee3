"""Weight Systems Bounded Context - quasihomogeneous weights, conditions and invariants"""
