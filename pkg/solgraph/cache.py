# solgraph -- solubility graphs of finite permutation groups
# See LICENSE.txt for copying details.

"""on-disk cache of class-level results

Entries are JSON files named by the SHA-256 of ``[version, spec, kind,
params]``, so upgrading solgraph leaves old entries unused. Files are
written to a temporary name and renamed into place.
"""

import hashlib
import json
import logging
import os
import tempfile
import time
import warnings

import attr

import solgraph
from solgraph import errors

logger = logging.getLogger(__name__)


CACHE_DIR_ENV = 'SOLGRAPH_CACHE_DIR'


def default_cache_dir(environ=None):
    """``$SOLGRAPH_CACHE_DIR``, else ``$XDG_CACHE_HOME/solgraph``, else
    ``~/.cache/solgraph``."""
    environ = os.environ if environ is None else environ
    if environ.get(CACHE_DIR_ENV):
        return environ[CACHE_DIR_ENV]
    if environ.get('XDG_CACHE_HOME'):
        return os.path.join(environ['XDG_CACHE_HOME'], 'solgraph')
    return os.path.join(os.path.expanduser('~'), '.cache', 'solgraph')


@attr.s(frozen=True)
class CacheEntry(object):
    key = attr.ib()
    spec = attr.ib()
    kind = attr.ib()
    params = attr.ib()
    payload = attr.ib(repr=False)
    created_at = attr.ib()

    def to_dict(self):
        return attr.asdict(self)


def canonical_json(value):
    return json.dumps(value, sort_keys=True, separators=(',', ':'))


class ResultCache(object):
    """A directory of cached payloads.

    :param str directory: Where entries live; created on first write.
    :param bool verify: Whether callers should recompute cache hits and
        compare, see `check`.
    """

    def __init__(self, directory, version=None, verify=False):
        self.directory = directory
        self.version = version or solgraph.__version__
        self.verify = verify
        self.hits = 0
        self.misses = 0

    def __repr__(self):
        return '<ResultCache {0!r} hits={1} misses={2}>'.format(
            self.directory, self.hits, self.misses)

    def key(self, spec, kind, params=None):
        material = canonical_json([self.version, str(spec), kind,
                                   params or {}])
        return hashlib.sha256(material.encode('utf-8')).hexdigest()

    def path(self, key):
        return os.path.join(self.directory, key[:2], key + '.json')

    def load(self, spec, kind, params=None):
        """Returns the cached `CacheEntry`, or ``None``."""
        key = self.key(spec, kind, params)
        try:
            with open(self.path(key)) as f:
                data = json.load(f)
            entry = CacheEntry(**data)
        except (IOError, OSError):
            self.misses += 1
            return None
        except (ValueError, TypeError):
            warnings.warn("ignoring unreadable cache entry {0}".format(
                self.path(key)))
            self.misses += 1
            return None
        if entry.key != key:
            warnings.warn("ignoring cache entry {0} stored under another "
                          "key".format(self.path(key)))
            self.misses += 1
            return None
        self.hits += 1
        logger.debug("cache hit for %s %s", spec, kind)
        return entry

    def store(self, spec, kind, payload, params=None):
        key = self.key(spec, kind, params)
        entry = CacheEntry(key, str(spec), kind, params or {}, payload,
                           time.strftime('%Y-%m-%dT%H:%M:%SZ', time.gmtime()))
        path = self.path(key)
        directory = os.path.dirname(path)
        os.makedirs(directory, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=directory, suffix='.tmp')
        try:
            with os.fdopen(fd, 'w') as f:
                json.dump(entry.to_dict(), f, sort_keys=True)
            os.replace(tmp, path)
        except BaseException:
            os.unlink(tmp)
            raise
        logger.debug("cached %s %s as %s", spec, kind, key)
        return entry

    def check(self, entry, fresh_payload):
        """Compares a cache hit with a recomputed payload.

        :raises: `.CacheMismatch` when they differ.
        """
        if canonical_json(entry.payload) != canonical_json(fresh_payload):
            raise errors.CacheMismatch(
                "cached {0} for {1} differs from recomputation ({2})".format(
                    entry.kind, entry.spec, self.path(entry.key)))
