"""Certified construction of k-fold triangle group filling data.

The package builds LPS Ramanujan quotient graphs from integer quaternions,
certifies girth (rotundness) and spectral gap (expansiveness) of link graphs,
assembles triangle-group certificates and emits finite presentations.
"""

__version__ = "0.1.0"
