"""
    CVT sub-package for the clique number bounds, their parameter
    arithmetic and the trace sampling experiment.
"""
