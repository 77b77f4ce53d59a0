//! Known cyclic base orderings shipped as data.
//!
//! Each fixture lists a graph's edges in ordering position, so the identity
//! ordering over the edge list is the claimed CBO. These are transcribed
//! once and treated as ground truth by the test suites.

use crate::graph::Graph;
use crate::ordering::EdgeOrdering;

#[derive(Debug, Clone, Copy)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    pub n: usize,
    pub edges: &'static [(usize, usize)],
}

impl Fixture {
    pub fn graph(&self) -> Graph {
        Graph::new(self.n, self.edges.to_vec()).expect("fixture edge lists are valid")
    }

    /// The claimed CBO: edges are listed in position order.
    pub fn ordering(&self) -> EdgeOrdering {
        EdgeOrdering::identity(self.edges.len())
    }
}

pub const PETERSEN: Fixture = Fixture {
    name: "petersen",
    description: "CBO of the Petersen graph",
    n: 10,
    edges: &[
        (1, 2),
        (8, 6),
        (4, 9),
        (2, 3),
        (7, 9),
        (5, 10),
        (3, 4),
        (8, 10),
        (1, 6),
        (4, 5),
        (6, 9),
        (2, 7),
        (1, 5),
        (7, 10),
        (3, 8),
    ],
};

pub const C7_SQUARE: Fixture = Fixture {
    name: "c7_square",
    description: "CBO of the square of the 7-cycle",
    n: 7,
    edges: &[
        (1, 3),
        (2, 4),
        (3, 5),
        (4, 6),
        (5, 7),
        (6, 1),
        (7, 2),
        (1, 2),
        (3, 4),
        (2, 3),
        (5, 6),
        (4, 5),
        (7, 1),
        (6, 7),
    ],
};

pub const C6_SQUARE: Fixture = Fixture {
    name: "c6_square",
    description: "CBO of the square of the 6-cycle",
    n: 6,
    edges: &[
        (1, 3),
        (4, 5),
        (2, 4),
        (5, 6),
        (3, 5),
        (1, 6),
        (4, 6),
        (1, 2),
        (1, 5),
        (2, 3),
        (2, 6),
        (3, 4),
    ],
};

pub const W6: Fixture = Fixture {
    name: "w6",
    description: "CBO of the wheel on 6 vertices",
    n: 6,
    edges: &[
        (1, 6),
        (3, 4),
        (2, 6),
        (4, 5),
        (3, 6),
        (5, 1),
        (4, 6),
        (1, 2),
        (5, 6),
        (2, 3),
    ],
};

pub const W7: Fixture = Fixture {
    name: "w7",
    description: "CBO of the wheel on 7 vertices",
    n: 7,
    edges: &[
        (1, 7),
        (4, 5),
        (2, 7),
        (5, 6),
        (3, 7),
        (6, 1),
        (4, 7),
        (1, 2),
        (5, 7),
        (2, 3),
        (6, 7),
        (3, 4),
    ],
};

// Double-wheel fixtures keep the drawn vertex numbering: vertex 1 is the
// first hub, the last vertex is the second hub, the rim sits in between.
pub const DW6: Fixture = Fixture {
    name: "dw6",
    description: "CBO of the double wheel on 6 vertices",
    n: 6,
    edges: &[
        (1, 2),
        (3, 4),
        (5, 6),
        (1, 3),
        (4, 5),
        (2, 6),
        (1, 4),
        (5, 2),
        (3, 6),
        (1, 5),
        (2, 3),
        (4, 6),
    ],
};

pub const DW7: Fixture = Fixture {
    name: "dw7",
    description: "CBO of the double wheel on 7 vertices",
    n: 7,
    edges: &[
        (1, 2),
        (6, 7),
        (4, 5),
        (1, 3),
        (2, 7),
        (5, 6),
        (1, 4),
        (3, 7),
        (6, 2),
        (1, 5),
        (7, 4),
        (3, 2),
        (6, 1),
        (5, 7),
        (3, 4),
    ],
};

pub const DW8: Fixture = Fixture {
    name: "dw8",
    description: "CBO of the double wheel on 8 vertices",
    n: 8,
    edges: &[
        (1, 2),
        (6, 8),
        (4, 5),
        (1, 3),
        (7, 8),
        (5, 6),
        (1, 4),
        (2, 8),
        (6, 7),
        (1, 5),
        (3, 8),
        (7, 2),
        (1, 6),
        (4, 8),
        (2, 3),
        (1, 7),
        (5, 8),
        (3, 4),
    ],
};

pub const BW8_ONE_SPOKE: Fixture = Fixture {
    name: "bw8_one_spoke",
    description: "CBO of the wheel on 8 vertices missing one spoke (hub is vertex 8)",
    n: 8,
    edges: &[
        (1, 2),
        (2, 8),
        (5, 6),
        (3, 8),
        (6, 7),
        (4, 8),
        (7, 1),
        (5, 8),
        (2, 3),
        (6, 8),
        (3, 4),
        (7, 8),
        (4, 5),
    ],
};

pub const Y3: Fixture = Fixture {
    name: "y3",
    description: "CBO of the triangular prism",
    n: 6,
    edges: &[
        (2, 3),
        (6, 4),
        (1, 4),
        (1, 2),
        (5, 6),
        (3, 6),
        (3, 1),
        (4, 5),
        (2, 5),
    ],
};

pub const Y5: Fixture = Fixture {
    name: "y5",
    description: "CBO of the pentagonal prism",
    n: 10,
    edges: &[
        (1, 2),
        (3, 8),
        (8, 9),
        (4, 5),
        (1, 6),
        (6, 7),
        (2, 3),
        (4, 9),
        (10, 9),
        (1, 5),
        (2, 7),
        (7, 8),
        (3, 4),
        (5, 10),
        (10, 6),
    ],
};

pub const Y8: Fixture = Fixture {
    name: "y8",
    description: "CBO of the octagonal prism",
    n: 16,
    edges: &[
        (1, 2),
        (3, 11),
        (11, 12),
        (4, 5),
        (6, 14),
        (14, 15),
        (7, 8),
        (1, 9),
        (9, 10),
        (2, 3),
        (4, 12),
        (12, 13),
        (5, 6),
        (7, 15),
        (15, 16),
        (8, 1),
        (2, 10),
        (10, 11),
        (3, 4),
        (5, 13),
        (13, 14),
        (6, 7),
        (8, 16),
        (16, 9),
    ],
};

pub const Y11: Fixture = Fixture {
    name: "y11",
    description: "CBO of the 11-gonal prism",
    n: 22,
    edges: &[
        (1, 2),
        (3, 14),
        (14, 15),
        (4, 5),
        (6, 17),
        (17, 18),
        (7, 8),
        (9, 20),
        (20, 21),
        (10, 11),
        (1, 12),
        (12, 13),
        (2, 3),
        (4, 15),
        (15, 16),
        (5, 6),
        (7, 18),
        (18, 19),
        (8, 9),
        (10, 21),
        (21, 22),
        (11, 1),
        (2, 13),
        (13, 14),
        (3, 4),
        (5, 16),
        (16, 17),
        (6, 7),
        (8, 19),
        (19, 20),
        (9, 10),
        (11, 22),
        (22, 12),
    ],
};

pub const ALL: &[Fixture] = &[
    PETERSEN,
    C7_SQUARE,
    C6_SQUARE,
    W6,
    W7,
    DW6,
    DW7,
    DW8,
    BW8_ONE_SPOKE,
    Y3,
    Y5,
    Y8,
    Y11,
];
