from pathlib import Path

from pydantic import BaseModel
from pydantic_settings import BaseSettings, SettingsConfigDict


class LogConfig(BaseModel):
    level: str = "WARNING"
    format: str = "%(asctime)s %(levelname)s %(name)s: %(message)s"


class CliConfig(BaseModel):
    indent: int = 2


class Config(BaseSettings):
    model_config = SettingsConfigDict(
        env_file=f"{Path(__file__).resolve().parent.parent.parent}/secrets/.env",
        env_prefix="MAGILAB_",
        case_sensitive=False,
        env_nested_delimiter="__",
        env_ignore_empty=True,
        extra="ignore",
    )

    # |V| + |E|
    budget: int = 22
    workers: int = 1
    automorphism_vertex_limit: int = 16

    log: LogConfig = LogConfig()
    cli: CliConfig = CliConfig()


config = Config()
