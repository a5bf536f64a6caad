"""
CSV output for the sweep commands.
"""

from rest_framework_csv.renderers import CSVRenderer

from reset_machine.utils import format_row


class CommentedCsvRenderer(CSVRenderer):
    """
    Render rows with a fixed column order behind a block of ``#`` comment lines.

    The renderer context carries ``header`` (column order) and ``comments``
    (ordered key/value pairs describing the run). Numbers are written with
    RESET_MACHINE_CSV_PRECISION significant digits.
    """
    media_type = 'text/csv'
    format = 'csv'
    charset = 'utf-8'
    writer_opts = {'lineterminator': '\n'}

    def render(self, data, media_type=None, renderer_context=None, writer_opts=None):
        renderer_context = renderer_context or {}
        precision = renderer_context.get('precision')
        rows = [format_row(row, precision) for row in data]
        self.header = list(renderer_context.get('header', self.header))

        comments = ''.join(f'# {key}: {value}\n' for key, value in renderer_context.get('comments', ()))
        table = super().render(rows, media_type, {'header': self.header}, writer_opts or self.writer_opts)
        if isinstance(table, bytes):
            table = table.decode(self.charset)
        return (comments + table).encode(self.charset)
