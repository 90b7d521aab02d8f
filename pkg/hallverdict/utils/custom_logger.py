import inspect
import logging


class CustomLogger:
    """override the python logger to include the group under evaluation with every record"""

    def __init__(self, name, level=None):
        self.logger = logging.getLogger(name)
        if level is not None:
            self.logger.setLevel(level)

    def get_subject(self):
        """retrieve the label of the nearest `group` in the call stack"""
        try:
            for frame_info in inspect.stack(0)[2:]:
                group = frame_info.frame.f_locals.get("group")
                label = getattr(group, "label", None)
                if label is not None:
                    return str(label)
        except Exception as error:  # skipcq: PYL-W0703
            self.logger.error("An error occurred while getting subject: %s", str(error))
        return ""

    def _log(self, level, args, **kwargs):
        if not self.logger.isEnabledFor(level):
            return
        caller_name = inspect.stack(0)[2].function
        self.logger.log(
            level,
            *args,
            extra={"caller_name": caller_name, "subject": self.get_subject()},
            **kwargs,
        )

    def info(self, *args):
        """call logger.info with the caller_name and the subject"""
        self._log(logging.INFO, args)

    def error(self, *args):
        """call logger.error with the caller_name and the subject"""
        self._log(logging.ERROR, args)

    def debug(self, *args):
        """call logger.debug with the caller_name and the subject"""
        self._log(logging.DEBUG, args)

    def exception(self, *args):
        """call logger.exception with the caller_name and the subject"""
        self._log(logging.ERROR, args, exc_info=True)

    def warning(self, *args):
        """call logger.warning with the caller_name and the subject"""
        self._log(logging.WARNING, args)
