import csv
from io import StringIO

from django.core.management import call_command


def run_command(name, *args):
    """Call a management command and return its stdout."""
    out = StringIO()
    call_command(name, *args, stdout=out)
    return out.getvalue()


def parse_csv(text):
    """Split command output into the comment block (as a dict) and the CSV rows."""
    comments = {}
    body = []
    for line in text.splitlines():
        if line.startswith('# '):
            key, _, value = line[2:].partition(': ')
            comments[key] = value
        else:
            body.append(line)
    reader = csv.DictReader(body)
    return comments, reader.fieldnames, list(reader)
