from pydantic import BaseModel, Field, ConfigDict


class BudgetConfig(BaseModel):
    """Search and enumeration limits shared by every module"""
    model_config = ConfigDict(extra="ignore")

    max_group_order: int = Field(10_000, gt=0)
    simplicity_order: int = Field(100_000, gt=0)
    max_subgroups_explored: int = Field(200_000, gt=0)
    time_limit: float = Field(600.0, gt=0)
    max_vertices: int = Field(64, gt=0)
    max_colorings: int = Field(2_000_000, gt=0)
    random_attempts: int = Field(4_000, ge=0)
    oracle_degree: int = Field(8, gt=0)


class HarnessConfig(BaseModel):
    model_config = ConfigDict(extra="ignore")

    corpus_max_vertices: int = Field(7, ge=1)
    workers: int = Field(1, ge=1)
    arith_max_n: int = Field(30, ge=7)
    uniform_sizes: list[int] = [5, 6]
    random_uniform_instances: int = Field(4, ge=0)
    # A_8 has order 20160
    cross_check_max_order: int = Field(20_160, gt=0)


class ToolkitConfig(BaseModel):
    model_config = ConfigDict(extra="ignore")

    budgets: BudgetConfig = BudgetConfig()
    harness: HarnessConfig = HarnessConfig()
