"""
Data models for property-suite results
"""

from dataclasses import dataclass, field
from typing import Dict, List


@dataclass(frozen=True)
class Violation:
    """
    A property that failed on a concrete input

    input holds re/im interleaved repr floats so the case can be replayed.
    """
    property: str
    input: str
    deviation: float
    bound: float


@dataclass(frozen=True)
class Finding:
    """
    A claim observed not to hold in general; recorded but never fails a run
    """
    property: str
    input: str
    deviation: float
    note: str


@dataclass
class CheckReport:
    """
    Represents the result of running one or more property suites
    """
    suite: str
    samples: int
    seed: int
    rng_algorithm: str
    violations: List[Violation] = field(default_factory=list)
    findings: List[Finding] = field(default_factory=list)
    # property name -> worst deviation seen
    max_deviation: Dict[str, float] = field(default_factory=dict)
    # property name -> number of failing inputs, including ones not kept in violations
    violation_counts: Dict[str, int] = field(default_factory=dict)
    execution_time_seconds: float = 0.0

    MAX_KEPT_PER_PROPERTY = 20

    def add_violation(self, violation: Violation) -> None:
        count = self.violation_counts.get(violation.property, 0) + 1
        self.violation_counts[violation.property] = count
        if count <= self.MAX_KEPT_PER_PROPERTY:
            self.violations.append(violation)

    def add_finding(self, finding: Finding) -> None:
        """Keep only the worst finding per property"""
        for index, existing in enumerate(self.findings):
            if existing.property == finding.property:
                if finding.deviation > existing.deviation:
                    self.findings[index] = finding
                return
        self.findings.append(finding)

    def record_deviation(self, name: str, deviation: float) -> None:
        """Track the worst deviation for a property"""
        current = self.max_deviation.get(name)
        if current is None or deviation > current:
            self.max_deviation[name] = deviation

    def merge(self, other: 'CheckReport') -> None:
        """Fold another suite's results into this report"""
        self.violations.extend(other.violations)
        for name, count in other.violation_counts.items():
            self.violation_counts[name] = self.violation_counts.get(name, 0) + count
        for finding in other.findings:
            self.add_finding(finding)
        for name, deviation in other.max_deviation.items():
            self.record_deviation(name, deviation)
        self.execution_time_seconds += other.execution_time_seconds

    @property
    def properties_checked(self) -> int:
        return len(self.max_deviation)

    @property
    def total_violations(self) -> int:
        return sum(self.violation_counts.values())

    @property
    def has_violations(self) -> bool:
        """Check if any property failed"""
        return self.total_violations > 0
