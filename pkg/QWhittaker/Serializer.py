import csv
import io
import json

from QWhittaker.Errors import ConfigError, QWhittakerError

class IProtocolHandler:
    def serialize(self, normalizedData):
        pass
    def deserialize(self, strRawData):
        pass

class JSONHandler(IProtocolHandler):
    def serialize(self, normalizedData):
        return json.dumps(normalizedData, indent=2)
    def deserialize(self, strRawData):
        return json.loads(strRawData)

def _rows(normalizedData):
    if isinstance(normalizedData, dict):
        return [normalizedData]
    return list(normalizedData)

def _cell(value):
    if isinstance(value, (dict, list)):
        return json.dumps(value, separators=(',', ':'))
    return '' if value is None else value

class CSVHandler(IProtocolHandler):
    """
        One row per record; nested values are written as compact JSON.
    """
    def serialize(self, normalizedData):
        rows = _rows(normalizedData)
        columns = []
        for row in rows:
            for key in row:
                if key not in columns:
                    columns.append(key)
        out = io.StringIO()
        writer = csv.DictWriter(out, fieldnames=columns, lineterminator='\n')
        writer.writeheader()
        for row in rows:
            writer.writerow({key: _cell(value) for key, value in row.items()})
        return out.getvalue()

    def deserialize(self, strRawData):
        rows = []
        for row in csv.DictReader(io.StringIO(strRawData)):
            decoded = {}
            for key, value in row.items():
                if value[:1] in ('[', '{'):
                    value = json.loads(value)
                decoded[key] = value
            rows.append(decoded)
        return rows

class PrettyHandler(IProtocolHandler):
    """
        Human-readable listing for terminals; write-only.
    """
    def serialize(self, normalizedData):
        blocks = []
        for row in _rows(normalizedData):
            lines = []
            for key, value in row.items():
                lines.append('{:>12}: {}'.format(key, _cell(value)))
            blocks.append('\n'.join(lines))
        return '\n\n'.join(blocks)

    def deserialize(self, strRawData):
        raise QWhittakerError('Pretty output cannot be read back')

class SerializerManager:
    def __init__(self, app):
        self._protocolHandler = {}
        self.setHandler('json', JSONHandler())
        self.setHandler('csv', CSVHandler())
        self.setHandler('pretty', PrettyHandler())

    def setHandler(self, strProtocol, handler):
        self._protocolHandler[strProtocol] = handler
        return self

    def getHandler(self, strProtocol):
        if strProtocol not in self._protocolHandler:
            raise ConfigError('Unknown output format {}'.format(strProtocol))
        return self._protocolHandler[strProtocol]

    def serialize(self, normalizedData, protocol):
        return self.getHandler(protocol).serialize(normalizedData)

    def deserialize(self, strRawData, protocol):
        return self.getHandler(protocol).deserialize(strRawData)
