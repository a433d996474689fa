//! Wire message types.
//!
//! Seven envelope kinds travel between clients, nodes, and the satellite:
//! client submissions, broadcast data messages, per-round sync votes, ask
//! messages, block fetch request/reply, and restart messages.

use crate::proto::block::{Block, Digest};
use crate::proto::crypto::{checksum, Signature};

/// Identifier of a system node (ground station). Nodes are numbered `0..n`.
pub type NodeId = u16;

/// Identity of a client submission, unique per scenario run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MsgId {
    pub client_id: u32,
    pub client_seq: u64,
}

impl MsgId {
    pub fn new(client_id: u32, client_seq: u64) -> MsgId {
        MsgId { client_id, client_seq }
    }
}

impl std::fmt::Display for MsgId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.client_id, self.client_seq)
    }
}

/// A client's submission to its home node over the internet path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClientMessage {
    pub id: MsgId,
    pub payload: Vec<u8>,
}

/// A broadcast data unit: one client message wrapped by a system node.
///
/// `checksum` covers the canonical encoding of every preceding field
/// (including the type tag); receivers drop messages that fail it, which
/// turns corruption into packet loss.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DataMessage {
    pub origin: NodeId,
    pub id: MsgId,
    pub payload: Vec<u8>,
    pub checksum: u32,
}

impl DataMessage {
    /// Wraps a client payload, computing the checksum.
    pub fn new(origin: NodeId, id: MsgId, payload: Vec<u8>) -> DataMessage {
        let mut m = DataMessage { origin, id, payload, checksum: 0 };
        m.checksum = checksum(&m.checksum_input());
        m
    }

    fn checksum_input(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(21 + self.payload.len());
        out.push(super::codec::TAG_DATA);
        out.extend_from_slice(&self.origin.to_le_bytes());
        out.extend_from_slice(&self.id.client_id.to_le_bytes());
        out.extend_from_slice(&self.id.client_seq.to_le_bytes());
        out.extend_from_slice(&(self.payload.len() as u32).to_le_bytes());
        out.extend_from_slice(&self.payload);
        out
    }

    /// True when the stored checksum matches the message contents.
    pub fn checksum_ok(&self) -> bool {
        checksum(&self.checksum_input()) == self.checksum
    }
}

/// A node's vote for the round at `round_index`: the hash of the block it
/// assembled, signed by the voter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyncMessage {
    pub round_index: u64,
    pub block_hash: Digest,
    pub node_id: NodeId,
    pub signature: Signature,
}

impl SyncMessage {
    /// The byte string the signature covers.
    pub fn signed_bytes(round_index: u64, block_hash: &Digest, node_id: NodeId) -> Vec<u8> {
        let mut out = Vec::with_capacity(42);
        out.extend_from_slice(&round_index.to_le_bytes());
        out.extend_from_slice(block_hash.as_bytes());
        out.extend_from_slice(&node_id.to_le_bytes());
        out
    }
}

/// Internet-path request for a missing sync vote of round `round_index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AskMessage {
    pub round_index: u64,
    pub requester: NodeId,
}

/// Internet-path request for a full block.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockRequest {
    pub round_index: u64,
    pub requester: NodeId,
}

/// Reply carrying a full block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockReply {
    pub block: Block,
}

/// Broadcast barrier that resets all failed nodes to their last committed
/// block. Shares the broadcast port with data messages, so its position in
/// the global order is the same at every receiver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestartMessage {
    pub last_committed_index: u64,
    pub node_id: NodeId,
    pub signature: Signature,
}

impl RestartMessage {
    pub fn signed_bytes(last_committed_index: u64, node_id: NodeId) -> Vec<u8> {
        let mut out = Vec::with_capacity(10);
        out.extend_from_slice(&last_committed_index.to_le_bytes());
        out.extend_from_slice(&node_id.to_le_bytes());
        out
    }
}

/// Any protocol message, as carried by either channel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Envelope {
    Client(ClientMessage),
    Data(DataMessage),
    Sync(SyncMessage),
    Ask(AskMessage),
    BlockRequest(BlockRequest),
    BlockReply(BlockReply),
    Restart(RestartMessage),
}

impl Envelope {
    /// Short kind name used in logs and traces.
    pub fn kind(&self) -> &'static str {
        match self {
            Envelope::Client(_) => "client",
            Envelope::Data(_) => "data",
            Envelope::Sync(_) => "sync",
            Envelope::Ask(_) => "ask",
            Envelope::BlockRequest(_) => "block-request",
            Envelope::BlockReply(_) => "block-reply",
            Envelope::Restart(_) => "restart",
        }
    }

    /// True for consensus control traffic (sync and restart), which the
    /// channels serve ahead of queued data.
    pub fn is_control(&self) -> bool {
        matches!(self, Envelope::Sync(_) | Envelope::Restart(_))
    }
}
