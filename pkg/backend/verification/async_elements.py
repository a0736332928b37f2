import asyncio
import os
from concurrent.futures import ProcessPoolExecutor

import django

from .properties import sweep_chunk


def _setup_worker():
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'config.settings')
    django.setup()


def chunk_bounds(size, workers):
    """Split ``range(2 ** size)`` into at most ``workers`` ordered chunks."""
    count = 1 << size
    step = max(1, -(-count // workers))
    return [(start, min(start + step, count))
            for start in range(0, count, step)]


class AsyncSweeper:
    def __init__(self, space, property_id, workers):
        self.space = space
        self.property_id = property_id
        self.workers = workers

    async def main(self):
        loop = asyncio.get_running_loop()
        bounds = chunk_bounds(len(self.space.universe), self.workers)
        with ProcessPoolExecutor(
            max_workers=self.workers, initializer=_setup_worker,
        ) as executor:
            return await asyncio.gather(*(
                loop.run_in_executor(
                    executor,
                    sweep_chunk,
                    self.space,
                    self.property_id,
                    start,
                    stop,
                )
                for start, stop in bounds
            ))

    def run(self):
        """Sweep all chunks and merge them as one ordered sweep would."""
        examined = 0
        for count, first in asyncio.run(self.main()):
            examined += count
            if first is not None:
                return examined, first
        return examined, None
