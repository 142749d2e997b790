"""
Example usage script for the Tight Triangulation Toolkit.

This script demonstrates how to:
1. Build the M and N families and inspect their f-vectors
2. Compute Betti numbers and check tightness
3. Compute automorphism groups and orientability
4. Build a sphere bundle by a handle addition
5. Run the check pipeline and print a certificate
"""

import sys
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent))

from src.generators.families import family_M, family_N
from src.generators.handles import sphere_bundle
from src.homology.betti import betti
from src.orientation.orientability import orientability
from src.recognition.stacked import in_walkup_K, in_walkup_Kbar
from src.recognition.tightness import tightness_certificate
from src.reporting.pipeline import PipelineContext, default_checks, run_pipeline
from src.symmetry.search import automorphism_group
from src.utils.config import load_config


def example_families():
    """Example: Build both families in dimension 3."""
    print("=" * 60)
    print("Example 1: The M and N families")
    print("=" * 60)

    for fam in (family_M(3), family_N(3)):
        filling, manifold = fam
        print(f"\n{fam.name}")
        print(f"  Filling: {len(filling)} facets, dual graph with {len(filling.dual_graph().edges)} edges")
        print(f"  Boundary f-vector: {manifold.f_vector().counts}")
        print(f"  Filling in K-bar(4): {bool(in_walkup_Kbar(filling))}")
        print(f"  Boundary in K(3): {bool(in_walkup_K(manifold))}")


def example_invariants():
    """Example: Homology, tightness, symmetry and orientability."""
    print("\n" + "=" * 60)
    print("Example 2: Invariants of M^3_29")
    print("=" * 60)

    manifold = family_M(3).manifold
    print(f"\nBetti numbers: {tuple(betti(manifold))}")
    certificate = tightness_certificate(manifold, subject="M^3_29")
    print(f"Tightness: {certificate.verdict.value}")
    print(f"|Aut|: {automorphism_group(manifold).order}")
    print(f"Orientable: {orientability(manifold).orientable}")


def example_sphere_bundle():
    """Example: The 7-vertex torus as a handle on a stacked 2-sphere."""
    print("\n" + "=" * 60)
    print("Example 3: Sphere bundles")
    print("=" * 60)

    torus = sphere_bundle(2, 7, (1, 2, 3))
    print(f"\nX^2_7(id): {torus.n_vertices} vertices, Betti {tuple(betti(torus))}")
    print(f"  Neighborly: {torus.is_neighborly(2)}")


def example_pipeline():
    """Example: Run the default checks and print the certificate."""
    print("\n" + "=" * 60)
    print("Example 4: Certificate for M^2_19")
    print("=" * 60)

    ctx = PipelineContext(complex=family_M(2).manifold, n_cyclic=19, samples=50)
    certificate = run_pipeline(ctx, default_checks(2), subject="M^2_19")
    for result in certificate.checks:
        print(f"  {result.name:16s} {result.verdict.value:12s} {result.summary}")
    print(f"\nExit code: {certificate.exit_code()}")


def main():
    """Run all examples."""
    print("\n" + "=" * 60)
    print("Tight Triangulation Toolkit - Example Usage")
    print("=" * 60)

    # Load configuration
    load_config()

    try:
        example_families()
        example_invariants()
        example_sphere_bundle()
        example_pipeline()

        print("\n" + "=" * 60)
        print("Examples completed successfully!")
        print("=" * 60)

    except Exception as e:
        print(f"\nError running examples: {e}")
        import traceback
        traceback.print_exc()


if __name__ == "__main__":
    main()
