//! Worked examples bundled with the crate: two step-by-step traces and two
//! full cell correspondences.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::bijections::MapFamily;
use crate::error::Result;
use crate::odd_ferrers::OddFerrersGraph;
use crate::partition::Partition;

const RAW: &str = include_str!("../fixtures/worked_examples.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceFixture {
    pub family: MapFamily,
    pub start: Vec<u32>,
    pub steps: Vec<Vec<u32>>,
    pub diffs: Vec<u64>,
    pub graph: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairsFixture {
    pub family: MapFamily,
    pub m: usize,
    pub n: u32,
    pub pairs: Vec<(Vec<u32>, Vec<u32>)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WorkedExamples {
    pub table1: TraceFixture,
    pub table2: PairsFixture,
    pub table3: TraceFixture,
    pub table4: PairsFixture,
}

pub fn worked_examples() -> &'static WorkedExamples {
    static CELL: OnceLock<WorkedExamples> = OnceLock::new();
    CELL.get_or_init(|| serde_json::from_str(RAW).expect("bundled fixture is valid JSON"))
}

pub fn raw_json() -> &'static str {
    RAW
}

impl TraceFixture {
    pub fn start(&self) -> Result<Partition> {
        Partition::new(self.start.clone())
    }

    pub fn steps(&self) -> Result<Vec<Partition>> {
        self.steps
            .iter()
            .map(|s| Partition::new(s.clone()))
            .collect()
    }

    pub fn graph(&self) -> Result<OddFerrersGraph> {
        OddFerrersGraph::from_shape(Partition::new(self.graph.clone())?)
    }
}

impl PairsFixture {
    pub fn pairs(&self) -> Result<Vec<(Partition, OddFerrersGraph)>> {
        self.pairs
            .iter()
            .map(|(p, g)| {
                Ok((
                    Partition::new(p.clone())?,
                    OddFerrersGraph::from_shape(Partition::new(g.clone())?)?,
                ))
            })
            .collect()
    }
}
