# Data models for two-qubit state geometry

# Import directly from individual modules as needed

__all__ = [
    'UnitVector', 'Qubit', 'Quregister2', 'Gate2', 'SU2Matrix',
    'ChartEmbedding', 'TensorSplit', 'EntanglementReport',
    'DensityMatrix2', 'DensityMatrix4', 'MixedState',
    'SweepRow', 'CheckReport', 'Violation', 'Finding'
]
