"""
Base classes for all :class:`Reader`\\s and :class:`Writer`\\s.
"""
import os
from io import BufferedIOBase
from io import BytesIO
from io import RawIOBase

from .errors import IoError
from .utils import get_basename
from .utils import is_file_readable
from .utils import logger


class Reader(object):

    def __init__(self, file):
        """Base class for reading a file.

        Parameters
        ----------
        file : :term:`path-like <path-like object>` or :term:`file-like <file object>`
            The file to read. A stream may be opened in text or binary mode.
        """
        if hasattr(file, 'as_posix'):  # a pathlib.Path object
            file = str(file)
        self._file = file

    def __repr__(self):
        return '<{} {!r}>'.format(self.__class__.__name__, self.source)

    @property
    def file(self):
        """:term:`path-like <path-like object>` or :term:`file-like <file object>`: The file
        object that is associated with the :class:`Reader`."""
        return self._file

    @property
    def source(self):
        """:class:`str`: The basename of the file, used in error messages."""
        return get_basename(self._file)

    def read(self, **kwargs):
        """Read the file.

        .. important::
           You must override this method.
        """
        raise NotImplementedError

    @staticmethod
    def get_lines(file, remove_empty_lines=False, encoding='utf-8', errors='strict'):
        """Return lines from a file.

        A UTF-8 byte-order mark at the start of the file is removed.

        Parameters
        ----------
        file : :term:`path-like <path-like object>` or :term:`file-like <file object>`
            The file to read lines from. If a stream, its position is restored
            after reading.
        remove_empty_lines : :class:`bool`, optional
            Whether to remove all empty lines.
        encoding : :class:`str`, optional
            The name of the encoding to use to decode the file.
        errors : :class:`str`, optional
            How encoding errors are to be handled, ``'strict'`` or ``'ignore'``.

        Returns
        -------
        :class:`list` of :class:`str`
            The lines from the file. Trailing whitespace is stripped from each line.

        Raises
        ------
        ~msl.badgoods.errors.IoError
            If the file cannot be opened or decoded.
        """
        if hasattr(file, 'as_posix'):
            file = str(file)

        try:
            if hasattr(file, 'read'):
                seekable = hasattr(file, 'seekable') and file.seekable()
                position = file.tell() if seekable else None
                content = file.read()
                if seekable:
                    file.seek(position)
                if isinstance(content, bytes):
                    content = content.decode(encoding, errors)
            else:
                with open(file, mode='rt', encoding=encoding, errors=errors) as fp:
                    content = fp.read()
        except UnicodeDecodeError as e:
            raise IoError('{}: cannot decode as {} ({})'.format(get_basename(file), encoding, e)) from None
        except OSError as e:
            raise IoError('{}: {}'.format(get_basename(file), e.strerror or e)) from None

        if content.startswith('\ufeff'):
            content = content[1:]

        lines = [line.rstrip() for line in content.splitlines()]
        if remove_empty_lines:
            return [line for line in lines if line]
        return lines


class Writer(object):

    def __init__(self, file=None, **metadata):
        """Base class for writing a file.

        A :class:`Writer` can be used as a :ref:`context manager <with>`, the
        :meth:`write` method is called when the ``with`` block exits.

        Parameters
        ----------
        file : :term:`path-like <path-like object>` or :term:`file-like <file object>`, optional
            The file to write to. Can also be specified in the :meth:`write` method.
        **metadata
            Key-value pairs that describe the content.
        """
        if hasattr(file, 'as_posix'):
            file = str(file)
        self._file = file
        self._metadata = dict(metadata)
        self._context_kwargs = {}

    def __repr__(self):
        return '<{} {!r}>'.format(self.__class__.__name__, get_basename(self._file) if self._file else None)

    @property
    def file(self):
        """:term:`path-like <path-like object>` or :term:`file-like <file object>`: The file
        object that is associated with the :class:`Writer`."""
        return self._file

    @property
    def metadata(self):
        """:class:`dict`: Key-value pairs that describe the content."""
        return self._metadata

    def update_context_kwargs(self, **kwargs):
        """Update the keyword arguments that are passed to :meth:`write`
        when the :ref:`context manager <with>` exits."""
        self._context_kwargs.update(**kwargs)

    def text(self, **kwargs):
        """Return the content that would be written.

        .. important::
           You must override this method.

        Returns
        -------
        :class:`str`
            The content.
        """
        raise NotImplementedError

    def to_bytes(self, encoding='utf-8', **kwargs):
        """Return the content as UTF-8 encoded :class:`bytes`."""
        buffer = BytesIO()
        self.write(buffer, encoding=encoding, **kwargs)
        return buffer.getvalue()

    def write(self, file=None, mode=None, encoding='utf-8', **kwargs):
        """Write to a file.

        Parameters
        ----------
        file : :term:`path-like <path-like object>` or :term:`file-like <file object>`, optional
            The file to write to. If :data:`None` then uses the `file` value
            that was specified when the :class:`Writer` was instantiated.
        mode : :class:`str`, optional
            Either ``'w'`` (overwrite) or ``'x'`` (the file must not exist). If
            :data:`None` then an existing file is not overwritten.
        encoding : :class:`str`, optional
            The encoding to use.
        **kwargs
            Passed to :meth:`text`.
        """
        if file is None:
            file = self._file
        if hasattr(file, 'as_posix'):
            file = str(file)
        if file is None or (isinstance(file, str) and not file):
            raise ValueError('You must specify a file to write to')

        content = self.text(**kwargs)

        if hasattr(file, 'write'):
            if isinstance(file, (BufferedIOBase, RawIOBase)):
                file.write(content.encode(encoding))
            else:
                file.write(content)
            return

        if mode is None:
            mode = 'w'
            if os.path.isfile(file) or is_file_readable(file):
                raise IoError(
                    "File exists {!r}\n"
                    "Specify mode='w' if you want to overwrite it.".format(file)
                )
        elif mode not in ('w', 'x'):
            raise ValueError('Invalid mode {!r}'.format(mode))

        logger.debug('writing %s', get_basename(file))
        try:
            with open(file, mode=mode, encoding=encoding, newline='\n') as fp:
                fp.write(content)
        except OSError as e:
            raise IoError('{}: {}'.format(get_basename(file), e.strerror or e)) from None

    def __enter__(self):
        return self

    def __exit__(self, *args):
        self.write(**self._context_kwargs)
