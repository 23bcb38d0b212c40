"""Tour of the exact exterior algebra core.

Builds constant-coefficient forms over exact rationals, wedges and
evaluates them, contracts with vectors, and splits a form relative to a
subspace into its graded parts.
"""

from fractions import Fraction

from extforms import (
    Vector,
    adapted_cobase,
    alpha,
    annihilator,
    basis_vector,
    decompose,
    evaluate,
    extract_derivative,
    interior,
    main_part,
    make_form,
    pairing,
    span,
    wedge,
)


def main():
    # a 2-form on R^4 given by its coefficients on index pairs
    omega = make_form(4, 2, [((1, 2), 1), ((3, 4), Fraction(1, 2))])
    print("omega =", dict(omega.terms()))

    squared = wedge(omega, omega)
    print("omega ^ omega =", dict(squared.terms()))

    e1, e2 = basis_vector(1, 4), basis_vector(2, 4)
    print("omega(e1, e2) =", evaluate(omega, [e1, e2]))
    print("<[e1 e2], omega> =", pairing([e1, e2], omega))

    # contraction is an antiderivation: i_v (a ^ b) = i_v a ^ b - a ^ i_v b
    v = Vector(4, (1, 0, 2, 0))
    print("i_v omega =", dict(interior(v, omega).terms()))

    # split relative to the plane C spanned by e1, e2: the annihilator of C
    # is spanned by a3, a4, and each part of omega uses a fixed number of
    # those covectors
    c = span(4, [e1, e2])
    print("annihilator basis:", [dict(a.terms()) for a in annihilator(c)])
    dec = decompose(omega, adapted_cobase(c))
    for s, part in dec.parts:
        print(f"  part with {s} annihilator factors:", dict(part.terms()))

    # the top part is the main part; lower parts are contractions of omega
    # by vectors from C wedged back out
    mp, s = main_part(omega, c)
    print("main part degree:", s)
    vs, core = extract_derivative(make_form(4, 2, [((1, 3), 1)]), c)
    print("extracted vectors:", [v.components for v in vs],
          " remaining factor:", dict(core.terms()))

    print("sanity: a3 is", dict(alpha(3, 4).terms()))


if __name__ == "__main__":
    main()
