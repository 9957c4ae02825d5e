import re

INTEGER_RE = re.compile(r'^-?\d+$')
TOKEN_SEP_RE = re.compile(r'[\s,]+')

COMMENT_CHAR = '#'
GRAPH_VERTICES_RE = re.compile(r'^vertices\s+(?P<count>\d+)$')
GRAPH_EDGE_RE = re.compile(r'^edge\s+(?P<u>\d+)\s+(?P<v>\d+)\s+(?P<sign>[+-])$')

SIGN_CHARS = {1: '+', -1: '-'}
SIGN_VALUES = {'+': 1, '-': -1}


def split_tokens(text):
    """
    Split a comma or whitespace separated list, ignoring surrounding blanks.
    :rtype: list[str]
    """
    text = text.strip()
    if not text:
        return []
    return [token for token in TOKEN_SEP_RE.split(text) if token]


def content_lines(text):
    """
    Yield ``(line_number, line)`` for the lines of a graph file with comments and blanks removed.
    """
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split(COMMENT_CHAR, 1)[0].strip()
        if line:
            yield number, line
