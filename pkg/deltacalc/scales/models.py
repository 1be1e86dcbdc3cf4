# -*- coding: utf-8 -*-
'''Time scale models.

A time scale is a nonempty closed subset of the real line. Each kind below
keeps the smallest representation that lets the jump operators be computed
in closed form: unbounded lattices are never materialised, finite sets and
interval unions are held as sorted numpy arrays.
'''

import math

import numpy as np

from deltacalc.exceptions import PointNotInScale, EmptyWindow, BadScaleSpec, NonFiniteValue
from deltacalc.utils import MEMBERSHIP_RTOL, membership_tolerance

MAX_CANTOR_DEPTH = 20

def format_point(value):
    '''Render a scale point for compact scale strings
    '''
    if math.isinf(value):
        return 'inf' if value > 0 else '-inf'
    if float(value).is_integer() and abs(value) < 1e15:
        return str(int(value))
    return repr(float(value))

class PointClass(object):
    '''Classification of a point by its jump operators

    Attributes:
        right_scattered: ``sigma(t) > t``
        left_scattered: ``rho(t) < t``
    '''
    def __init__(self, right_scattered, left_scattered):
        self.right_scattered = bool(right_scattered)
        self.left_scattered = bool(left_scattered)

    @property
    def right(self):
        return 'right-scattered' if self.right_scattered else 'right-dense'

    @property
    def left(self):
        return 'left-scattered' if self.left_scattered else 'left-dense'

    @property
    def is_isolated(self):
        return self.right_scattered and self.left_scattered

    @property
    def is_dense(self):
        return not (self.right_scattered or self.left_scattered)

    @property
    def tag(self):
        '''``isolated``, ``dense`` or the ``left-..., right-...`` pair
        '''
        if self.is_isolated:
            return 'isolated'
        if self.is_dense:
            return 'dense'
        return '{}, {}'.format(self.left, self.right)

    def __eq__(self, other):
        return (
            isinstance(other, PointClass) and
            self.right_scattered == other.right_scattered and
            self.left_scattered == other.left_scattered
        )

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.right_scattered, self.left_scattered))

    def __repr__(self):
        return '<PointClass {}>'.format(self.tag)

    def __str__(self):
        return self.tag

class TimeScale(object):
    '''Base model for all time scales

    Subclasses implement ``_locate`` (snap a real to the canonical scale point
    or return ``None``), ``_sigma``/``_rho`` on canonical points, ``_sample``
    and ``pieces``. Instances are immutable after construction.

    Keyword Arguments:
        rtol: relative membership tolerance, see
            :py:func:`~deltacalc.utils.membership_tolerance`
    '''
    kind = None

    def __init__(self, rtol=MEMBERSHIP_RTOL):
        self.rtol = rtol

    @property
    def infimum(self):
        raise NotImplementedError

    @property
    def supremum(self):
        raise NotImplementedError

    @property
    def spec(self):
        '''The compact scale string describing this scale
        '''
        raise NotImplementedError

    def tolerance(self, t):
        return membership_tolerance(t, self.rtol)

    def _locate(self, t):
        raise NotImplementedError

    def _sigma(self, point):
        raise NotImplementedError

    def _rho(self, point):
        raise NotImplementedError

    def _sample(self, a, b, max_step):
        raise NotImplementedError

    def locate(self, t):
        '''Snap ``t`` to the scale point it denotes

        Arguments:
            t: a finite real

        Returns:
            The canonical float for the scale point within the membership
            tolerance of ``t``

        Raises:
            PointNotInScale: if no scale point is that close
        '''
        t = float(t)
        point = self._locate(t) if math.isfinite(t) else None
        if point is None:
            raise PointNotInScale(
                '{} is not a point of {}'.format(t, self.spec),
                point=t, scale=self.spec
            )
        return point

    def contains(self, t):
        try:
            self.locate(t)
        except PointNotInScale:
            return False
        return True

    def sigma(self, t):
        return self._sigma(self.locate(t))

    def rho(self, t):
        return self._rho(self.locate(t))

    def mu(self, t):
        point = self.locate(t)
        return self._sigma(point) - point

    def nu(self, t):
        point = self.locate(t)
        return point - self._rho(point)

    def classify(self, t):
        point = self.locate(t)
        return PointClass(self._sigma(point) > point, self._rho(point) < point)

    def in_kappa(self, t):
        '''False exactly at a finite maximum that is left-scattered
        '''
        point = self.locate(t)
        supremum = self.supremum
        return not (
            math.isfinite(supremum) and point == supremum and
            self._rho(point) < point
        )

    def in_kappa_dual(self, t):
        '''False exactly at a finite minimum that is right-scattered
        '''
        point = self.locate(t)
        infimum = self.infimum
        return not (
            math.isfinite(infimum) and point == infimum and
            self._sigma(point) > point
        )

    def sample(self, a, b, max_step):
        '''Evaluation grid over ``[a, b]``

        Arguments:
            a: left end of the window
            b: right end of the window, ``a <= b``
            max_step: largest spacing between fill points on dense parts

        Returns:
            Sorted list of scale points: every scattered point of the window
            plus fill points on its dense parts

        Raises:
            EmptyWindow: if the window does not meet the scale
        '''
        a, b, max_step = float(a), float(b), float(max_step)
        if not (a <= b) or not max_step > 0:
            raise EmptyWindow(
                'window [{}, {}] with step {} is not valid'.format(a, b, max_step),
                window=(a, b)
            )
        points = self._sample(a, b, max_step)
        if len(points) == 0:
            raise EmptyWindow(
                '{} does not meet [{}, {}]'.format(self.spec, a, b),
                window=(a, b), scale=self.spec
            )
        return points

    def pieces(self, a, b):
        '''Split ``[a, b]`` into what a delta integral has to add up

        Returns:
            A tuple ``(dense, scattered)``: the nondegenerate intervals of
            ``[a, b]`` contained in the scale, and the right-scattered scale
            points of ``[a, b)``
        '''
        raise NotImplementedError

    def describe(self):
        return dict(
            kind=self.kind, spec=self.spec,
            infimum=self.infimum, supremum=self.supremum
        )

    def __repr__(self):
        return '<{} {}>'.format(self.__class__.__name__, self.spec)

class UniformLattice(TimeScale):
    '''The h-numbers ``{offset + h*k : k integer}``

    Arguments:
        step: spacing ``h > 0``

    Keyword Arguments:
        offset: any finite real, defaults to 0
    '''
    kind = 'lattice'

    def __init__(self, step, offset=0.0, rtol=MEMBERSHIP_RTOL):
        super(UniformLattice, self).__init__(rtol)
        step, offset = float(step), float(offset)
        if not (math.isfinite(step) and step > 0):
            raise BadScaleSpec('lattice step must be a positive real, got {}'.format(step))
        if not math.isfinite(offset):
            raise BadScaleSpec('lattice offset must be finite, got {}'.format(offset))
        self.step = step
        self.offset = offset

    @property
    def infimum(self):
        return -math.inf

    @property
    def supremum(self):
        return math.inf

    @property
    def spec(self):
        if self.step == 1 and self.offset == 0:
            return 'Z'
        if self.offset == 0:
            return 'hZ:{}'.format(format_point(self.step))
        return 'hZ:{}:{}'.format(format_point(self.step), format_point(self.offset))

    def index(self, point):
        return int(round((point - self.offset) / self.step))

    def _locate(self, t):
        point = self.offset + self.index(t) * self.step
        if abs(point - t) <= self.tolerance(t):
            return point
        return None

    def _sigma(self, point):
        return self.offset + (self.index(point) + 1) * self.step

    def _rho(self, point):
        return self.offset + (self.index(point) - 1) * self.step

    def mu(self, t):
        self.locate(t)
        return self.step

    def nu(self, t):
        self.locate(t)
        return self.step

    def _sample(self, a, b, max_step):
        slack = self.tolerance(max(abs(a), abs(b))) / self.step
        first = int(math.ceil((a - self.offset) / self.step - slack))
        last = int(math.floor((b - self.offset) / self.step + slack))
        if last < first:
            return []
        return (self.offset + np.arange(first, last + 1) * self.step).tolist()

    def pieces(self, a, b):
        a, b = self.locate(a), self.locate(b)
        return [], [p for p in self._sample(a, b, self.step) if p < b]

    def describe(self):
        rv = super(UniformLattice, self).describe()
        rv.update(step=self.step, offset=self.offset)
        return rv

class QLattice(TimeScale):
    '''The q-numbers ``{q**k : k = 0, 1, 2, ...}``

    Arguments:
        ratio: ``q > 1``
    '''
    kind = 'qlattice'

    def __init__(self, ratio, rtol=MEMBERSHIP_RTOL):
        super(QLattice, self).__init__(rtol)
        ratio = float(ratio)
        if not (math.isfinite(ratio) and ratio > 1):
            raise BadScaleSpec('q-lattice ratio must be a real above 1, got {}'.format(ratio))
        self.ratio = ratio
        self._log_ratio = math.log(ratio)

    @property
    def infimum(self):
        return 1.0

    @property
    def supremum(self):
        return math.inf

    @property
    def spec(self):
        return 'q:{}'.format(format_point(self.ratio))

    def index(self, point):
        return int(round(math.log(point) / self._log_ratio))

    def power(self, k):
        '''``q**k``, infinite past the top of the float range'''
        try:
            return self.ratio ** k
        except OverflowError:
            return math.inf

    def _locate(self, t):
        if t <= 0:
            return None
        k = self.index(t)
        if k < 0:
            return None
        point = self.power(k)
        if abs(point - t) <= self.tolerance(t):
            return point
        return None

    def _sigma(self, point):
        successor = self.power(self.index(point) + 1)
        if math.isinf(successor):
            raise NonFiniteValue(
                'the successor of {} in {} is not a finite float'.format(point, self.spec),
                point=point, scale=self.spec
            )
        return successor

    def _rho(self, point):
        k = self.index(point)
        return self.power(k - 1) if k > 0 else point

    def classify(self, t):
        point = self.locate(t)
        return PointClass(True, point > 1.0)

    def _sample(self, a, b, max_step):
        if b < 1 - self.tolerance(1.0):
            return []
        first = 0 if a <= 1 else int(math.ceil(math.log(a) / self._log_ratio - 1e-9))
        last = int(math.floor(math.log(max(b, 1.0)) / self._log_ratio + 1e-9))
        points = [self.power(k) for k in range(first, last + 1)]
        return [
            p for p in points
            if a - self.tolerance(a) <= p <= b + self.tolerance(b)
        ]

    def pieces(self, a, b):
        a, b = self.locate(a), self.locate(b)
        return [], [p for p in self._sample(a, b, 1.0) if p < b]

    def describe(self):
        rv = super(QLattice, self).describe()
        rv.update(ratio=self.ratio)
        return rv

class FiniteSet(TimeScale):
    '''A finite set of reals

    Arguments:
        points: iterable of finite reals; sorted and de-duplicated
    '''
    kind = 'finite'

    def __init__(self, points, rtol=MEMBERSHIP_RTOL):
        super(FiniteSet, self).__init__(rtol)
        try:
            points = np.unique(np.asarray(list(points), dtype=float))
        except (TypeError, ValueError):
            raise BadScaleSpec('finite set points must be reals')
        if points.size == 0:
            raise BadScaleSpec('a time scale must be nonempty')
        if not np.all(np.isfinite(points)):
            raise BadScaleSpec('finite set points must be finite')
        self.points = points

    @property
    def infimum(self):
        return float(self.points[0])

    @property
    def supremum(self):
        return float(self.points[-1])

    @property
    def spec(self):
        return 'set:{{{}}}'.format(','.join(format_point(p) for p in self.points))

    def _position(self, point):
        return int(np.searchsorted(self.points, point))

    def _locate(self, t):
        i = self._position(t)
        best = None
        for j in (i - 1, i):
            if 0 <= j < self.points.size:
                candidate = float(self.points[j])
                if abs(candidate - t) <= self.tolerance(t):
                    if best is None or abs(candidate - t) < abs(best - t):
                        best = candidate
        return best

    def _sigma(self, point):
        i = self._position(point)
        return float(self.points[i + 1]) if i + 1 < self.points.size else point

    def _rho(self, point):
        i = self._position(point)
        return float(self.points[i - 1]) if i > 0 else point

    def _sample(self, a, b, max_step):
        lo, hi = a - self.tolerance(a), b + self.tolerance(b)
        return self.points[(self.points >= lo) & (self.points <= hi)].tolist()

    def pieces(self, a, b):
        a, b = self.locate(a), self.locate(b)
        supremum = self.supremum
        return [], [p for p in self._sample(a, b, 1.0) if p < b and p != supremum]

    def describe(self):
        rv = super(FiniteSet, self).describe()
        rv.update(points=self.points.size)
        return rv

class IntervalUnion(TimeScale):
    '''A finite union of closed intervals

    Inputs are sorted and overlapping or touching intervals are merged, so
    every gap of the stored union is strictly positive. A degenerate interval
    ``[a, a]`` is an isolated point; the first start may be ``-inf`` and the
    last end ``+inf``.

    Arguments:
        intervals: iterable of ``(start, end)`` pairs with ``start <= end``
    '''
    kind = 'union'

    def __init__(self, intervals, rtol=MEMBERSHIP_RTOL):
        super(IntervalUnion, self).__init__(rtol)
        starts, ends = self._normalize(intervals)
        self.starts = starts
        self.ends = ends

    @staticmethod
    def _normalize(intervals):
        pairs = []
        for interval in intervals:
            try:
                start, end = (float(i) for i in interval)
            except (TypeError, ValueError):
                raise BadScaleSpec('interval {!r} is not a pair of reals'.format(interval))
            if math.isnan(start) or math.isnan(end) or start > end:
                raise BadScaleSpec('interval [{}, {}] is empty'.format(start, end))
            if start == math.inf or end == -math.inf:
                raise BadScaleSpec('interval [{}, {}] holds no real'.format(start, end))
            pairs.append((start, end))
        if not pairs:
            raise BadScaleSpec('a time scale must be nonempty')
        pairs.sort()
        merged = [list(pairs[0])]
        for start, end in pairs[1:]:
            if start <= merged[-1][1]:
                merged[-1][1] = max(merged[-1][1], end)
            else:
                merged.append([start, end])
        return (
            np.array([m[0] for m in merged], dtype=float),
            np.array([m[1] for m in merged], dtype=float)
        )

    @property
    def intervals(self):
        return list(zip(self.starts.tolist(), self.ends.tolist()))

    @property
    def infimum(self):
        return float(self.starts[0])

    @property
    def supremum(self):
        return float(self.ends[-1])

    @property
    def spec(self):
        parts = []
        for start, end in self.intervals:
            if start == end:
                parts.append('{{{}}}'.format(format_point(start)))
            else:
                parts.append('[{},{}]'.format(format_point(start), format_point(end)))
        return 'union:' + '+'.join(parts)

    def _interval_of(self, point):
        return int(np.searchsorted(self.starts, point, side='right')) - 1

    def _locate(self, t):
        tol = self.tolerance(t)
        i = int(np.searchsorted(self.starts, t + tol, side='right')) - 1
        if i < 0 or t > self.ends[i] + tol:
            return None
        start, end = float(self.starts[i]), float(self.ends[i])
        if abs(t - end) <= tol:
            return end
        if abs(t - start) <= tol:
            return start
        return t

    def _sigma(self, point):
        i = self._interval_of(point)
        if point < self.ends[i]:
            return point
        if i + 1 < self.starts.size:
            return float(self.starts[i + 1])
        return point

    def _rho(self, point):
        i = self._interval_of(point)
        if point > self.starts[i]:
            return point
        if i > 0:
            return float(self.ends[i - 1])
        return point

    def _overlapping(self, a, b):
        lo, hi = a - self.tolerance(a), b + self.tolerance(b)
        return np.nonzero((self.starts <= hi) & (self.ends >= lo))[0]

    def _sample(self, a, b, max_step):
        points = []
        for i in self._overlapping(a, b):
            lo = max(float(self.starts[i]), a)
            hi = min(float(self.ends[i]), b)
            if hi > lo:
                panels = max(1, int(math.ceil((hi - lo) / max_step)))
                points.extend(np.linspace(lo, hi, panels + 1).tolist())
            else:
                points.append(float(self.starts[i]) if self.starts[i] >= a else lo)
        return points

    def pieces(self, a, b):
        a, b = self.locate(a), self.locate(b)
        dense, scattered = [], []
        last = self.starts.size - 1
        for i in self._overlapping(a, b):
            lo = max(float(self.starts[i]), a)
            hi = min(float(self.ends[i]), b)
            if hi > lo:
                dense.append((lo, hi))
            end = float(self.ends[i])
            if i < last and a <= end < b:
                scattered.append(end)
        return dense, scattered

    def describe(self):
        rv = super(IntervalUnion, self).describe()
        rv.update(intervals=int(self.starts.size))
        return rv

class Reals(IntervalUnion):
    '''The whole real line'''
    kind = 'reals'

    def __init__(self, rtol=MEMBERSHIP_RTOL):
        super(Reals, self).__init__([(-math.inf, math.inf)], rtol)

    @property
    def spec(self):
        return 'R'

    def _locate(self, t):
        return t

    def _sigma(self, point):
        return point

    def _rho(self, point):
        return point

class CantorApprox(IntervalUnion):
    '''Stage ``depth`` of the middle-thirds Cantor construction on [0, 1]

    The ``2**depth`` intervals have width ``3**-depth``; their left ends are
    ``numerators / 3**depth`` with integer numerators, so every endpoint is a
    triadic rational.

    Arguments:
        depth: integer between 0 and 20
    '''
    kind = 'cantor'

    def __init__(self, depth, rtol=MEMBERSHIP_RTOL):
        TimeScale.__init__(self, rtol)
        if isinstance(depth, bool) or int(depth) != depth or not 0 <= depth <= MAX_CANTOR_DEPTH:
            raise BadScaleSpec(
                'cantor depth must be an integer in [0, {}], got {}'.format(MAX_CANTOR_DEPTH, depth)
            )
        self.depth = int(depth)
        numerators = np.zeros(1, dtype=np.int64)
        for _ in range(self.depth):
            numerators = np.concatenate([3 * numerators, 3 * numerators + 2])
        self.numerators = np.sort(numerators)
        self.denominator = 3 ** self.depth
        self.starts = self.numerators / float(self.denominator)
        self.ends = (self.numerators + 1) / float(self.denominator)

    @property
    def spec(self):
        return 'cantor:{}'.format(self.depth)

    @property
    def measure(self):
        return float(np.sum(self.ends - self.starts))

    def describe(self):
        rv = super(CantorApprox, self).describe()
        rv.update(depth=self.depth)
        return rv
