"""Cyclo Algebra Bounded Context - divisors of products of cyclotomic polynomials"""
