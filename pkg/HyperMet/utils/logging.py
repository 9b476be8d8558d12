import logging
import os

import HyperMet

LEVELS = {
    "debug": logging.DEBUG,
    "info": logging.INFO,
    "warning": logging.WARNING,
    "error": logging.ERROR,
}


def _level(name):
    return LEVELS.get(str(name).lower(), logging.WARNING)


def getLogger(name):
    """Logger registered with HyperMet and writing through the shared handler"""
    logger = logging.getLogger(name)
    if HyperMet.ch not in logger.handlers:
        logger.addHandler(HyperMet.ch)
    # reports own stdout, keep log records on our handler only
    logger.propagate = False
    HyperMet.loggers[name] = logger
    return logger


def _set_level(level):
    # loggers pass everything some handler still wants
    for logger in HyperMet.loggers.values():
        files = [h.level for h in logger.handlers if isinstance(h, logging.FileHandler)]
        logger.setLevel(min([level, HyperMet.ch.level] + files))


def log_to_file(filename, overwrite=True, level="info"):
    """Copy the records of every HyperMet logger to a file

    Parameters
    ----------
    filename : str or Path
    overwrite : bool, optional
        start a fresh file, by default True
    level : str, optional
        one of 'debug', 'info', 'warning', 'error', by default 'info'
    """
    mode = "w" if overwrite else "a"
    if overwrite and os.path.isfile(filename):
        getLogger(__name__).info(f"Overwriting log file {filename}")
    fh = logging.FileHandler(filename, mode=mode)
    fh.setFormatter(HyperMet.formatter)
    fh.setLevel(_level(level))
    for logger in HyperMet.loggers.values():
        for handler in [h for h in logger.handlers if isinstance(h, logging.FileHandler)]:
            logger.removeHandler(handler)
            handler.close()
        logger.addHandler(fh)
    _set_level(fh.level)


def log_to_console(level="warning"):
    """Level of the console handler, 'debug', 'info', 'warning' or 'error'"""
    HyperMet.ch.setLevel(_level(level))
    _set_level(HyperMet.ch.level)
