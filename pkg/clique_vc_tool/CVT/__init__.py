"""
    Clique VC Tool (CVT) Python package, clique counting, maximal clique
    set systems and the forbidden semi-induced blow-up patterns behind
    linear clique number bounds.
"""
