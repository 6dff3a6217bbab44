"""Log of diagnostics shown to the user after a command runs."""
from __future__ import annotations

import logging
import textwrap
from typing import TYPE_CHECKING, Iterable

if TYPE_CHECKING:
    from typing import TextIO


class Message:
    """One diagnostic line with its severity and repeat count."""

    def __init__(self, text: str, level: int = logging.INFO) -> None:
        """Initialize a message seen once at the given logging level."""
        self.plain_text = text
        self.level = level
        self.count = 1

    @property
    def full_text(self) -> str:
        """Level, text and repeat count, as printed to stderr."""
        prefix = logging.getLevelName(self.level).lower()
        text = f"{prefix}: {self.plain_text}"
        if self.count > 1:
            return f"{text} (x{self.count})"
        return text


class MessageLog:
    """Diagnostics gathered while a command runs, printed when it ends."""

    def __init__(self) -> None:
        """Start with no messages."""
        self.messages: list[Message] = []

    def add_message(
        self, text: str, level: int = logging.INFO, *, stack: bool = True,
    ) -> None:
        """Add a message to this log.

        If 'stack' is True then the message can stack with a previous message
        of the same text.
        """
        if stack and self.messages and text == self.messages[-1].plain_text:
            self.messages[-1].count += 1
        else:
            self.messages.append(Message(text, level))

    def render(self, stream: TextIO, width: int = 79) -> None:
        """Write the messages to 'stream', wrapped at 'width' columns."""
        self.render_messages(stream, width, self.messages)

    @staticmethod
    def wrap(string: str, width: int) -> Iterable[str]:
        """Wrap one message, indenting continuation lines."""
        for line in string.splitlines():  # Handle newlines in messages.
            yield from textwrap.wrap(
                line, width, expand_tabs=True, subsequent_indent="  ",
            )

    @classmethod
    def render_messages(
        cls, stream: TextIO, width: int, messages: Iterable[Message],
    ) -> None:
        """Render the messages provided, oldest first."""
        for message in messages:
            for line in cls.wrap(message.full_text, width):
                stream.write(line + "\n")


class MessageLogHandler(logging.Handler):
    """Forward log records into a MessageLog."""

    def __init__(
        self, message_log: MessageLog, level: int = logging.WARNING,
    ) -> None:
        """Attach the handler to a log, keeping records at 'level' and up."""
        super().__init__(level)
        self.message_log = message_log

    def emit(self, record: logging.LogRecord) -> None:
        """Add the formatted record to the message log."""
        self.message_log.add_message(record.getMessage(), record.levelno)
