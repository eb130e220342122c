"""
Codec JSON des CountMap : [{"value": "p/q", "count": "n"}, ...] trié par valeur.
"""
from pydantic import TypeAdapter, ValidationError

from core.exceptions import ParseError
from core.rational import format_rational, parse_rational
from models.counting import CountMap
from models.schemas import CountEntrySchema
from repositories.base import BaseRepository

_entries_adapter = TypeAdapter(list[CountEntrySchema])


class CountMapRepository(BaseRepository[CountMap]):
    format_name = "count map"

    @staticmethod
    def to_schema(model: CountMap) -> list[CountEntrySchema]:
        return [
            CountEntrySchema(value=format_rational(x), count=str(c))
            for x, c in sorted(model.items())
        ]

    def parse(self, text: str) -> CountMap:
        try:
            entries = _entries_adapter.validate_json(text)
        except ValidationError as exc:
            raise ParseError(f"invalid count map: {exc.errors()[0]['msg']}") from exc
        counts = {}
        for entry in entries:
            value = parse_rational(entry.value)
            if value in counts:
                raise ParseError(f"duplicate value {entry.value}")
            try:
                count = int(entry.count)
            except ValueError as exc:
                raise ParseError(f"invalid count {entry.count!r}") from exc
            if count < 0:
                raise ParseError(f"negative count {entry.count!r}")
            counts[value] = count
        return CountMap(counts)

    def serialize(self, model: CountMap) -> str:
        return _entries_adapter.dump_json(self.to_schema(model)).decode() + "\n"


count_map_repository = CountMapRepository()
