import os
from dataclasses import dataclass

from dotenv import load_dotenv

THREADS = 1
MAX_TERMS = 10**8  # Largest enumeration run without --force
LOG_FILE = "logs/meetdet.log"

load_dotenv()


@dataclass
class Config:
    threads: int
    max_terms: int
    log_file: str

    @classmethod
    def from_env(cls):
        try:
            threads = int(os.getenv("MEETDET_THREADS", THREADS))
            max_terms = int(os.getenv("MEETDET_MAX_TERMS", MAX_TERMS))
        except ValueError as e:
            raise ValueError(
                f"MEETDET_THREADS and MEETDET_MAX_TERMS must be integers: {e}"
            ) from None
        log_file = os.getenv("MEETDET_LOG_FILE", LOG_FILE)

        return cls(
            threads=threads,
            max_terms=max_terms,
            log_file=log_file,
        )

    def validate(self):
        if self.threads < 1:
            raise ValueError("MEETDET_THREADS must be at least 1.")
        if self.max_terms < 1:
            raise ValueError("MEETDET_MAX_TERMS must be positive.")
        if not self.log_file:
            raise ValueError("Please set the MEETDET_LOG_FILE environment variable.")

        return self
