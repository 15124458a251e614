class MaxScoreQueue:
    """A max-priority queue of vertex scores, backed by a binary heap.

    The top entry has the highest score, ties going to the smallest vertex
    id. Scores are updated in place through subscription
    (`q[vertex] = score`) and any vertex can be removed. An index map keeps
    the heap position of every vertex so updates and removals cost
    O(log n).
    """

    def __init__(self, scores=None):
        self._heap = []
        self._index_map = {}
        if scores is not None:
            for vertex, score in scores.items():
                self[vertex] = score

    def __len__(self):
        return len(self._heap)

    def __contains__(self, vertex):
        return vertex in self._index_map

    def __getitem__(self, vertex):
        return self._heap[self._index_map[vertex]].score

    def __setitem__(self, vertex, score):
        """Updates an existing entry, or inserts a new one."""
        pos = self._index_map.get(vertex)
        if pos is None:
            pos = len(self._heap)
            entry = _Entry(vertex, score)
            self._heap.append(entry)
            self._siftup(pos, entry)
        else:
            entry = self._heap[pos]
            entry.score = score
            self._restore(pos)

    def peek(self):
        entry = self._heap[0]
        return entry.vertex, entry.score

    def pop(self):
        """Removes and returns the (vertex, score) pair on top"""
        if not self._heap:
            raise IndexError("pop from an empty queue")
        entry = self._heap[0]
        self.remove(entry.vertex)
        return entry.vertex, entry.score

    def remove(self, vertex):
        pos = self._index_map.pop(vertex)
        tail = self._heap.pop()
        if pos < len(self._heap):
            self._heap[pos] = tail
            self._index_map[tail.vertex] = pos
            self._restore(pos)

    def _restore(self, pos):
        entry = self._heap[pos]
        if pos > 0 and entry.before(self._heap[(pos - 1) // 2]):
            self._siftup(pos, entry)
        else:
            self._siftdown(pos, entry)

    def _siftdown(self, pos, entry):
        """Moves the entry at pos down until both children come after it."""
        heap, imap = self._heap, self._index_map
        heaplen = len(heap)
        child = pos * 2 + 1
        while child < heaplen:
            right = child + 1
            if right < heaplen and heap[right].before(heap[child]):
                child = right
            if not heap[child].before(entry):
                break
            heap[pos] = heap[child]
            imap[heap[pos].vertex] = pos
            pos = child
            child = pos * 2 + 1
        heap[pos] = entry
        imap[entry.vertex] = pos

    def _siftup(self, pos, entry):
        """Swaps an entry with its parent until the heap is restored."""
        heap, imap = self._heap, self._index_map
        while pos > 0:
            parent_pos = (pos - 1) // 2
            parent_entry = heap[parent_pos]
            if not entry.before(parent_entry):
                break
            heap[pos] = parent_entry
            imap[parent_entry.vertex] = pos
            pos = parent_pos
        heap[pos] = entry
        imap[entry.vertex] = pos


class _Entry:
    """Queue entry storing a vertex and its score."""

    __slots__ = "score", "vertex"

    def __init__(self, vertex, score):
        self.vertex = vertex
        self.score = score

    def before(self, other):
        if self.score != other.score:
            return self.score > other.score
        return self.vertex < other.vertex
