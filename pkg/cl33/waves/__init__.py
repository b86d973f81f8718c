from .planewave import PlaneWaveSpec, plane_wave_field, check_plane_wave
from .packet import PacketSpec, SampledField, NodeCount, \
    simple_packet_nodes, resonant_packet, eigenfrequency_ladder, \
    packet_energy_quantum, boost_packet
