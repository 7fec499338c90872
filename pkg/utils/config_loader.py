"""Configuration loader for budgets and campaign settings"""
import json
import os
import yaml
from pathlib import Path
from typing import Dict, Any, Optional
from dotenv import load_dotenv

from models.config_models import BudgetConfig, HarnessConfig, ToolkitConfig

ROOT_DIR = Path(__file__).parent.parent
DEFAULT_CONFIG_PATH = ROOT_DIR / "config" / "app_config.yaml"

ENV_OVERRIDES = {
    "SYMKIT_MAX_GROUP_ORDER": ("budgets", "max_group_order"),
    "SYMKIT_MAX_VERTICES": ("budgets", "max_vertices"),
    "SYMKIT_WORKERS": ("harness", "workers"),
}


class ConfigLoader:
    """Load and manage toolkit configuration"""

    @staticmethod
    def load_config(config_path: str) -> Dict[str, Any]:
        """Load configuration from JSON or YAML file"""
        path = Path(config_path)

        if not path.exists():
            raise FileNotFoundError(f"Config file not found: {config_path}")

        with open(path, 'r') as f:
            if path.suffix == '.json':
                return json.load(f)
            elif path.suffix in ['.yaml', '.yml']:
                return yaml.safe_load(f) or {}
            else:
                raise ValueError(f"Unsupported config file format: {path.suffix}")

    @staticmethod
    def apply_env_overrides(config_data: Dict[str, Any]) -> Dict[str, Any]:
        """Overlay SYMKIT_* variables (after loading .env) on the raw config"""
        load_dotenv(ROOT_DIR / '.env')
        for var, (section, key) in ENV_OVERRIDES.items():
            value = os.environ.get(var, "").strip()
            if value:
                config_data.setdefault(section, {})[key] = int(value)
        return config_data

    @staticmethod
    def load_budgets(config_data: Dict[str, Any]) -> BudgetConfig:
        return BudgetConfig(**config_data.get('budgets', {}))

    @staticmethod
    def load_harness(config_data: Dict[str, Any]) -> HarnessConfig:
        return HarnessConfig(**config_data.get('harness', {}))

    @staticmethod
    def load_toolkit_config(config_path: Optional[str] = None) -> ToolkitConfig:
        """Load the full configuration, falling back to defaults when no file exists"""
        path = Path(config_path) if config_path else DEFAULT_CONFIG_PATH
        config_data = ConfigLoader.load_config(str(path)) if path.exists() else {}
        config_data = ConfigLoader.apply_env_overrides(config_data)
        return ToolkitConfig(
            budgets=ConfigLoader.load_budgets(config_data),
            harness=ConfigLoader.load_harness(config_data),
        )

    @staticmethod
    def create_default_config() -> Dict[str, Any]:
        """Create a default configuration template"""
        return ToolkitConfig().model_dump()

    @staticmethod
    def save_config(config_data: Dict[str, Any], output_path: str):
        """Save configuration to file"""
        path = Path(output_path)

        with open(path, 'w') as f:
            if path.suffix == '.json':
                json.dump(config_data, f, indent=2)
            elif path.suffix in ['.yaml', '.yml']:
                yaml.dump(config_data, f, default_flow_style=False)
            else:
                raise ValueError(f"Unsupported config file format: {path.suffix}")
