from pydantic import BaseModel, ConfigDict, Field


class CertificationReport(BaseModel):
    """Outcome of certifying a quadratic binomial system as a Gröbner basis."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    system_id: str = Field(..., description="Name of the certified system")
    setting: str = Field(..., description="FreeAlgebra or QuantumSpace")
    n_overlaps: int = Field(0, ge=0, description="Number of overlap compositions")
    n_solvable: int = Field(0, ge=0, description="Compositions that reduce to zero")
    normal3_count: int = Field(..., ge=0, description="Normal words of length 3")
    expected_dim3: int = Field(..., ge=0, description="Dimension of the degree-3 component")
    passed: bool = Field(..., alias="pass", description="Overall verdict")

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True)
