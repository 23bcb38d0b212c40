"""Linear theory of wedging with a fixed 2-form.

Shows rank and kernel of constant 2-forms, the rank table of all wedge
maps, solving Omega ^ beta = kappa, and constructing kernel elements with
a prescribed main-part degree.
"""

from extforms import (
    construct_kernel_element,
    kernel2,
    kernel_main_profile,
    lambda_report,
    main_part,
    make_form,
    rank2,
    solve_wedge,
    wedge,
)


def std(n, p):
    """Sum of p coordinate planes on R^n."""
    return make_form(n, 2, [((2 * i - 1, 2 * i), 1) for i in range(1, p + 1)])


def main():
    omega = std(5, 2)
    print("omega =", dict(omega.terms()))
    print("rank:", rank2(omega))
    ker = kernel2(omega)
    print("kernel basis:", [v.components for v in ker.basis])

    print("\nwedge map rank table:")
    for row in lambda_report(omega):
        print(f"  k={row.k}: {row.dim_domain} -> {row.dim_codomain}, "
              f"rank {row.rank}, injective={row.injective}, "
              f"surjective={row.surjective}")

    # solve Omega ^ beta = kappa on R^4
    omega4 = std(4, 2)
    kappa = make_form(4, 3, [((1, 2, 3), 1)])
    beta, kernel = solve_wedge(omega4, kappa)
    print("\nsolve on R^4: beta =", dict(beta.terms()),
          " kernel dim:", len(kernel))

    # every kernel element of the degree-l wedge map has at least rank(omega)
    # factors from the annihilator of ker(omega); sample the distribution
    profile = kernel_main_profile(omega, 2)
    print("\nkernel of the degree-2 map: dim", profile.kernel_dim)
    print("sampled main-degree histogram:", profile.entries,
          " minimum:", profile.min_s, " rank bound:", profile.p)

    # and elements with any admissible main degree can be built explicitly
    built = construct_kernel_element(omega, 3, 2)
    print("\nconstructed degree-3 kernel element:", dict(built.terms()))
    print("omega ^ element == 0:", wedge(omega, built).is_zero())
    print("its main-part degree:", main_part(built, ker)[1])


if __name__ == "__main__":
    main()
