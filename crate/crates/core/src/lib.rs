pub mod featgraph;
pub mod atomtree;
pub mod centrality;
pub mod frontend;
pub mod logic;
pub mod pipeline;
pub mod sat;
pub mod synth;
pub mod uir;
