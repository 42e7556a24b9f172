"""Configuration management for the openly disjoint cycles toolkit."""

import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()


def _get_bool(name: str, default: str) -> bool:
    return os.getenv(name, default).strip().lower() in ("1", "true", "yes", "on")


class Config:
    """Configuration class for the toolkit.

    Nothing here is required; the defaults reproduce every documented
    example. Environment values only tune logging and resource caps.
    """

    # Logging Configuration
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")
    LOG_TO_FILE: bool = _get_bool("LOG_TO_FILE", "false")
    LOGS_DIR: str = os.getenv("LOGS_DIR", "logs")

    # Execution Configuration
    DEFAULT_JOBS: int = int(os.getenv("DEFAULT_JOBS", "1"))
    DEFAULT_SEED: int = int(os.getenv("DEFAULT_SEED", "0"))

    # Exact search caps
    EXACT_PARTITION_CAP: int = int(os.getenv("EXACT_PARTITION_CAP", "20"))
    HEURISTIC_RESTARTS: int = int(os.getenv("HEURISTIC_RESTARTS", "16"))
    LINKED_SUBSET_BUDGET: int = int(os.getenv("LINKED_SUBSET_BUDGET", "2000000"))
    TREEWIDTH_MAX_VERTICES: int = int(os.getenv("TREEWIDTH_MAX_VERTICES", "12"))
    BRUTE_FORCE_MAX_VERTICES: int = int(os.getenv("BRUTE_FORCE_MAX_VERTICES", "8"))

    # Generators
    REGULAR_RETRY_BUDGET: int = int(os.getenv("REGULAR_RETRY_BUDGET", "200"))

    @classmethod
    def validate(cls) -> bool:
        """Validate that every cap and budget is positive."""
        positive_vars = [
            "DEFAULT_JOBS",
            "EXACT_PARTITION_CAP",
            "HEURISTIC_RESTARTS",
            "LINKED_SUBSET_BUDGET",
            "TREEWIDTH_MAX_VERTICES",
            "BRUTE_FORCE_MAX_VERTICES",
            "REGULAR_RETRY_BUDGET",
        ]

        invalid_vars = []
        for var in positive_vars:
            if getattr(cls, var) < 1:
                invalid_vars.append(var)

        if invalid_vars:
            raise ValueError(f"Non-positive configuration values: {', '.join(invalid_vars)}")

        return True


# Global config instance
config = Config()
