# Numerical services: linear algebra, the qubit group, charts, densities, suites

# Import directly from individual modules as needed

__all__ = ['PropertySuite', 'PropertySuiteInterface', 'SweepEngine', 'run_suite']
