from pydantic import BaseModel, Field, ConfigDict
from typing import List, Dict, Optional, Any
from datetime import datetime, timezone
from enum import Enum
import json

REPORT_SCHEMA_VERSION = "1.0"

# fields that vary between identical runs
TIMING_FIELDS = {"created_at", "started_at", "completed_at", "elapsed_seconds", "logs", "errors", "warnings"}


class CampaignStatus(str, Enum):
    PENDING = "pending"
    RUNNING = "running"
    PASSED = "passed"
    FAILED = "failed"
    INCOMPLETE = "incomplete"


class RecordVerdict(str, Enum):
    PASS = "pass"
    COUNTEREXAMPLE = "counterexample"
    OUT_OF_SCOPE = "out_of_scope"
    UNKNOWN = "unknown"


class Provenance(str, Enum):
    PAPER = "paper"
    DERIVED = "derived"


class CampaignRecord(BaseModel):
    model_config = ConfigDict(extra="allow")

    input_id: str
    verdict: RecordVerdict = RecordVerdict.PASS
    computed: Dict[str, Any] = {}
    expected: Dict[str, Any] = {}
    provenance: Provenance = Provenance.DERIVED
    notes: List[str] = []


class CampaignReport(BaseModel):
    model_config = ConfigDict(extra="ignore")

    schema_version: str = REPORT_SCHEMA_VERSION
    campaign: str
    status: CampaignStatus = CampaignStatus.PENDING

    records: List[CampaignRecord] = []
    counterexamples: List[str] = []
    summary: Dict[str, Any] = {}
    notes: List[str] = []

    # Progress tracking
    total_records: int = 0
    passed_records: int = 0
    out_of_scope_records: int = 0
    unknown_records: int = 0

    # Timestamps
    created_at: datetime = Field(default_factory=lambda: datetime.now(timezone.utc))
    started_at: Optional[datetime] = None
    completed_at: Optional[datetime] = None
    elapsed_seconds: float = 0.0

    # Logs
    logs: List[str] = []
    errors: List[str] = []
    warnings: List[str] = []

    def add(self, record: CampaignRecord):
        self.records.append(record)

    def finalize(self):
        """Sort records by id, count verdicts and set the status"""
        self.records.sort(key=lambda r: r.input_id)
        self.total_records = len(self.records)
        self.passed_records = sum(r.verdict == RecordVerdict.PASS for r in self.records)
        self.out_of_scope_records = sum(r.verdict == RecordVerdict.OUT_OF_SCOPE for r in self.records)
        self.unknown_records = sum(r.verdict == RecordVerdict.UNKNOWN for r in self.records)
        self.counterexamples = [r.input_id for r in self.records
                                if r.verdict == RecordVerdict.COUNTEREXAMPLE]
        if self.counterexamples:
            self.status = CampaignStatus.FAILED
        elif self.unknown_records:
            self.status = CampaignStatus.INCOMPLETE
        else:
            self.status = CampaignStatus.PASSED

    def deterministic_dump(self) -> Dict[str, Any]:
        return self.model_dump(mode="json", exclude=TIMING_FIELDS)

    def deterministic_json(self) -> str:
        return json.dumps(self.deterministic_dump(), indent=2, sort_keys=True)


class CampaignSuite(BaseModel):
    """Several campaigns run together (``verify all``)"""
    schema_version: str = REPORT_SCHEMA_VERSION
    campaigns: List[CampaignReport] = []

    @property
    def status(self) -> CampaignStatus:
        statuses = {c.status for c in self.campaigns}
        if CampaignStatus.FAILED in statuses:
            return CampaignStatus.FAILED
        if CampaignStatus.INCOMPLETE in statuses:
            return CampaignStatus.INCOMPLETE
        return CampaignStatus.PASSED

    def deterministic_dump(self) -> Dict[str, Any]:
        return {"schema_version": self.schema_version,
                "campaigns": [c.deterministic_dump() for c in self.campaigns]}
