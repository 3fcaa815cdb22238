#!/usr/bin/env python3
# Copyright (c) 2026 The qcc-engine Authors.
# Licensed under the Apache License, Version 2.0.
"""Regenerate the FCIDUMP fixtures under fixtures/ (requires pyscf)."""

import os
import sys

from pyscf import gto, scf
from pyscf.tools import fcidump

OUT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "fixtures")


def dump(name, atom, basis="sto-3g"):
    mol = gto.M(atom=atom, basis=basis, unit="Angstrom", verbose=0)
    mf = scf.RHF(mol)
    mf.conv_tol = 1e-12
    mf.kernel()
    path = os.path.join(OUT, name + ".fcidump")
    fcidump.from_scf(mf, path, tol=1e-14)
    print(f"{name}: norb={mol.nao} nelec={mol.nelectron} e_hf={mf.e_tot:.10f}")


def chain(symbol, count, spacing):
    return "; ".join(f"{symbol} 0 0 {i * spacing:.6f}" for i in range(count))


def main():
    os.makedirs(OUT, exist_ok=True)
    for d in (0.60, 0.74, 1.00, 1.50):
        dump(f"h2_{d:.2f}", f"H 0 0 0; H 0 0 {d}")
    dump("lih_1.60", "Li 0 0 0; H 0 0 1.60")
    dump("h4_1.00", chain("H", 4, 1.00))
    dump("h6_1.00", chain("H", 6, 1.00))
    return 0


if __name__ == "__main__":
    sys.exit(main())
