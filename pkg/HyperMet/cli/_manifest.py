import json
import time
from dataclasses import dataclass, field
from typing import Dict, List

from ..utils import getLogger, HyperMetJSONEncoder
from ..utils.helper import file_digest
from ..version import __version__

logger = getLogger(__name__)


@dataclass
class RunManifest:
    """Everything needed to reproduce the outputs of one command"""

    command: str
    arguments: Dict[str, object]
    inputs: Dict[str, str] = field(default_factory=dict)
    outputs: List[str] = field(default_factory=list)
    version: str = __version__
    elapsed: float = 0.0
    started: float = field(default_factory=time.perf_counter, repr=False)

    def add_input(self, path):
        if path is not None:
            self.inputs[str(path)] = file_digest(path)

    def add_output(self, path):
        if path is not None:
            self.outputs.append(str(path))

    def __tojson__(self):
        return {
            "command": self.command,
            "arguments": self.arguments,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "version": self.version,
            "elapsed": self.elapsed,
        }

    def write(self, output):
        """Write next to output as <output>.manifest.json

        Returns
        -------
        str
            the manifest path
        """
        self.elapsed = time.perf_counter() - self.started
        path = f"{output}.manifest.json"
        with open(path, "w") as fp:
            json.dump(self, fp, cls=HyperMetJSONEncoder, sort_keys=True, indent=2)
            fp.write("\n")
        logger.info(f"Wrote manifest {path}")
        return path
